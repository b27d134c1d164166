#include "polycomplete/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycomplete {

namespace {

void require_increasing(const std::vector<Vertex>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            throw std::invalid_argument("Simplex: vertex labels are 1-based");
        if (i > 0 && v[i - 1] >= v[i])
            throw std::invalid_argument("Simplex: labels must be strictly increasing");
    }
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    require_increasing(vertices_);
}

Simplex::Simplex(std::initializer_list<Vertex> vertices) : vertices_(vertices) {
    require_increasing(vertices_);
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::without(std::size_t i) const {
    if (i >= vertices_.size())
        throw std::out_of_range("Simplex::without: index out of range");
    Simplex out;
    out.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i)
            out.vertices_.push_back(vertices_[j]);
    return out;
}

Simplex Simplex::with(Vertex v) const {
    if (v == 0)
        throw std::invalid_argument("Simplex::with: vertex labels are 1-based");
    auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (pos != vertices_.end() && *pos == v)
        throw std::invalid_argument("Simplex::with: vertex already present");
    Simplex out;
    out.vertices_.reserve(vertices_.size() + 1);
    out.vertices_.insert(out.vertices_.end(), vertices_.begin(), pos);
    out.vertices_.push_back(v);
    out.vertices_.insert(out.vertices_.end(), pos, vertices_.end());
    return out;
}

std::string Simplex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(vertices_[i]);
    }
    return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the labels.
    std::size_t h = 1469598103934665603ULL;
    for (Vertex v : s) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h ^ s.size();
}

}  // namespace polycomplete
