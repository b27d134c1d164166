/**
 * Complete incidence matrices (and matching exact coordinates) of small
 * standard polytopes, plus deletion helpers that turn them into incomplete
 * minors.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>

#include "polycomplete/geometry.hpp"
#include "polycomplete/incidence.hpp"

namespace polycomplete {

enum class Family { Simplex, CubeKM, Hypercube, CrossPolytope, Cyclic, Prism };

struct FixtureSpec {
    Family family = Family::Simplex;
    int d = 0;  ///< Simplex, Hypercube, CrossPolytope, Cyclic
    int n = 0;  ///< Cyclic only
    std::shared_ptr<const FixtureSpec> base;  ///< Prism only

    static FixtureSpec simplex(int d) { return {Family::Simplex, d, 0, nullptr}; }
    static FixtureSpec cube_km() { return {Family::CubeKM, 3, 0, nullptr}; }
    static FixtureSpec hypercube(int d) { return {Family::Hypercube, d, 0, nullptr}; }
    static FixtureSpec cross_polytope(int d) { return {Family::CrossPolytope, d, 0, nullptr}; }
    static FixtureSpec cyclic(int d, int n) { return {Family::Cyclic, d, n, nullptr}; }
    static FixtureSpec prism(FixtureSpec base) {
        return {Family::Prism, 0, 0, std::make_shared<const FixtureSpec>(std::move(base))};
    }

    /// "cyclic(4,8)", "prism(cube-km)", ...
    [[nodiscard]] std::string name() const;
};

/// Largest dimension and cyclic vertex count accepted by fixture_incidence().
inline constexpr int kMaxFixtureDim = 6;
inline constexpr int kMaxFixtureVertices = 12;

/// Complete incidence matrix of the described polytope.  Throws std::invalid_argument out of range.
[[nodiscard]] IncidenceMinor fixture_incidence(const FixtureSpec& spec);

/**
 * Cyclic polytope C_d(n), vertices in moment-curve order.  Rows are the
 * d-subsets satisfying Gale's evenness condition, in lexicographic order.
 * Requires n > d >= 2.
 */
[[nodiscard]] IncidenceMinor cyclic_incidence(int d, int n);

/**
 * The 3-cube with Klee-Minty vertex numbering:
 * facets 1234, 1278, 1458, 2367, 3456, 5678.
 */
[[nodiscard]] IncidenceMinor cube_km();

/// Vertex 1 is the origin, vertex i+1 is e_i; row i omits vertex i.
[[nodiscard]] IncidenceMinor simplex_incidence(int d);

/// Vertex k+1 has coordinates given by the bits of k; rows x_j = 0 then x_j = 1 for each j.
[[nodiscard]] IncidenceMinor hypercube_incidence(int d);

/// Vertices +e_1, -e_1, +e_2, ...; one row per sign vector (bit j set means -e_{j+1}).
[[nodiscard]] IncidenceMinor cross_polytope_incidence(int d);

/**
 * Prism over P: dimension d+1, bottom copy 1..n and top copy n+1..2n.
 * Rows: bottom, top, then F ∪ (F+n) for each row F of J in order.
 */
[[nodiscard]] IncidenceMinor prism(const IncidenceMinor& minor);

/// Remove the given 0-based rows and columns; d unchanged.  Throws std::out_of_range.
[[nodiscard]] IncidenceMinor delete_minor(const IncidenceMinor& minor, const std::set<std::size_t>& rows,
                                          const std::set<std::size_t>& cols);

/**
 * Exact coordinates and facet halfspaces whose extracted incidence matrix
 * equals fixture_incidence(spec).  Supports Simplex, CubeKM, Hypercube,
 * CrossPolytope and Cyclic (points (t, t^2, ..., t^d) for t = 1..n).
 */
[[nodiscard]] GeometricInstance geometric_fixture(const FixtureSpec& spec);

}  // namespace polycomplete
