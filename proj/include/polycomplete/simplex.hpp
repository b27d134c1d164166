#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polycomplete {

/// Vertex labels are 1-based: a minor with n columns has vertices 1..n.
using Vertex = std::uint32_t;

/**
 * A face given by its vertex labels in strictly increasing order.  The empty
 * simplex is valid and stands for the empty face of a complex (and for the
 * ridge of a one-dimensional pulling complex).
 */
class Simplex {
public:
    Simplex() = default;

    /// Throws std::invalid_argument unless the labels are strictly increasing and nonzero.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    /// Sorts the labels; throws on duplicates or zero.
    static Simplex from_unsorted(std::vector<Vertex> vertices);

    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return vertices_.empty(); }
    [[nodiscard]] std::span<const Vertex> vertices() const noexcept { return vertices_; }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i]; }
    [[nodiscard]] auto begin() const noexcept { return vertices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return vertices_.end(); }

    [[nodiscard]] bool contains(Vertex v) const;

    /// The face with the i-th vertex removed.
    [[nodiscard]] Simplex without(std::size_t i) const;
    /// The simplex with `v` added; throws if already present.
    [[nodiscard]] Simplex with(Vertex v) const;

    /// "1 7 8"; the empty simplex prints as "".
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace polycomplete
