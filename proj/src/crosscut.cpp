#include "polycomplete/crosscut.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace polycomplete {

FaceLayer::FaceLayer(int k, std::vector<Simplex> sorted_unique_faces) : k_(k), faces_(std::move(sorted_unique_faces)) {
    index_.reserve(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (faces_[i].size() != static_cast<std::size_t>(k_ + 1))
            throw std::invalid_argument("FaceLayer: face has the wrong cardinality");
        if (i > 0 && !(faces_[i - 1] < faces_[i]))
            throw std::invalid_argument("FaceLayer: faces must be sorted and distinct");
        index_.emplace(faces_[i], i);
    }
}

std::size_t FaceLayer::find(const Simplex& face) const {
    auto it = index_.find(face);
    return it == index_.end() ? faces_.size() : it->second;
}

FaceLayer enumerate_faces(const IncidenceMinor& minor, int k) {
    if (k < -1)
        throw std::invalid_argument("enumerate_faces: k must be at least -1");
    const auto size = static_cast<std::size_t>(k + 1);

    std::unordered_set<Simplex, SimplexHash> seen;
    std::vector<Vertex> pick(size);
    std::vector<std::size_t> idx(size);
    for (std::size_t r = 0; r < minor.rows(); ++r) {
        const auto support = minor.row_support(r);
        if (support.size() < size)
            continue;
        // Lexicographic walk over size-subsets of the row's support.
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            for (std::size_t i = 0; i < size; ++i)
                pick[i] = support[idx[i]];
            seen.insert(Simplex(pick));
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == support.size() - size + (i - 1))
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    std::vector<Simplex> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return FaceLayer(k, std::move(faces));
}

Gf2Matrix boundary_matrix(const FaceLayer& upper, const FaceLayer& lower) {
    if (upper.dim() != lower.dim() + 1)
        throw std::invalid_argument("boundary_matrix: layer dimensions must differ by one");
    Gf2Matrix m(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const Simplex& face = upper[j];
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::size_t i = lower.find(face.without(drop));
            if (i == lower.size())
                throw std::invalid_argument("boundary_matrix: lower layer is missing a face of " + face.to_string());
            m.set(i, j);
        }
    }
    return m;
}

std::string_view to_string(Side side) noexcept {
    return side == Side::Primal ? "primal" : "dual";
}

HomologyReport completeness_via_homology(int d, const IncidenceMinor& minor) {
    if (d < 0)
        throw std::invalid_argument("completeness_via_homology: dimension must be nonnegative");

    HomologyReport report;
    report.dim = d;
    report.stats = size_stats(minor);
    report.facets_used = minor.rows();

    if (d == 0) {
        report.complete = minor.cols() == 1;
        report.by_convention = true;
        return report;
    }
    if (minor.rows() == 0) {
        report.complete = false;
        report.by_convention = true;
        return report;
    }

    const FaceLayer below = enumerate_faces(minor, d - 2);
    const FaceLayer middle = enumerate_faces(minor, d - 1);
    const FaceLayer above = enumerate_faces(minor, d);

    const Gf2Matrix bottom = boundary_matrix(middle, below);
    const Gf2Matrix top = boundary_matrix(above, middle);

    report.bottom = {bottom.rows(), bottom.cols()};
    report.top = {top.rows(), top.cols()};
    report.bottom_nullity = nullity(bottom);
    report.top_rank = rank(top);
    report.complete = report.bottom_nullity > report.top_rank;
    return report;
}

HomologyReport decide_report(int d, const IncidenceMinor& minor, SidePolicy policy) {
    // The d = 0 convention is stated for the primal matrix.
    if (d == 0)
        return completeness_via_homology(d, minor);

    Side side = Side::Primal;
    if (policy == SidePolicy::Dual) {
        side = Side::Dual;
    } else if (policy == SidePolicy::Auto) {
        const SizeStats stats = size_stats(minor);
        side = stats.s <= stats.s_col ? Side::Primal : Side::Dual;
    }
    HomologyReport report =
        side == Side::Primal ? completeness_via_homology(d, minor) : completeness_via_homology(d, transpose(minor));
    report.side = side;
    return report;
}

bool decide(int d, const IncidenceMinor& minor) {
    return decide_report(d, minor).complete;
}

}  // namespace polycomplete
