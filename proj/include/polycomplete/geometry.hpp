/**
 * Exact-rational geometric front-end.
 *
 * A geometric instance is a point set V and a halfspace set F in R^d.  The
 * combinatorial completeness question is only meaningful when
 *   (a) conv V lies inside every halfspace,
 *   (b) both conv V and the halfspace intersection are d-dimensional,
 *   (c) every point is a vertex of the halfspace intersection,
 *   (d) every halfspace defines a facet of conv V.
 * validate_instance() checks these with exact linear algebra (no LP); the
 * incidence matrix is then read off by exact equality a·v = b.
 */
#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polycomplete/incidence.hpp"

namespace polycomplete {

using Rational = boost::multiprecision::cpp_rational;

struct RationalPoint {
    std::vector<Rational> coords;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// The closed halfspace normal · x <= offset.
struct Halfspace {
    std::vector<Rational> normal;
    Rational offset;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct GeometricInstance {
    int dim = 0;
    std::vector<RationalPoint> points;
    std::vector<Halfspace> halfspaces;
};

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::vector<std::size_t> bad_points;      ///< 0-based
    std::vector<std::size_t> bad_halfspaces;  ///< 0-based
    std::vector<std::string> messages;
};

struct ValidationReport {
    CheckOutcome distinct;        ///< no repeated points
    CheckOutcome containment;     ///< (a)
    CheckOutcome full_dimension;  ///< (b)
    CheckOutcome vertices;        ///< (c) every point is a vertex of the halfspace intersection
    CheckOutcome facets;          ///< (d) every halfspace defines a facet of conv V

    [[nodiscard]] bool ok() const noexcept {
        return distinct.passed && containment.passed && full_dimension.passed && vertices.passed && facets.passed;
    }
    [[nodiscard]] std::vector<const CheckOutcome*> checks() const {
        return {&distinct, &containment, &full_dimension, &vertices, &facets};
    }
};

/**
 * Throws std::invalid_argument when coordinate counts don't match dim or a
 * halfspace normal is zero; every other problem is reported, not thrown.
 *
 * (b) requires the points to affinely span R^d and no halfspace to be tight on
 * all points.  Given (a), Q then contains a d-dimensional set, so dim Q = d.
 * (c) requires each point to lie on at least d boundaries whose normals have
 * rank d: then it is the unique solution of those tight equations, hence a
 * vertex of Q.
 * (d) requires the points on each boundary to affinely span dimension d-1.
 */
[[nodiscard]] ValidationReport validate_instance(const GeometricInstance& inst);

/// Row per halfspace, column per point; 1 iff normal·point == offset exactly.
[[nodiscard]] IncidenceMinor extract_incidence(const GeometricInstance& inst);

/// Rank of a rational matrix given as rows.
[[nodiscard]] std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Dimension of the affine hull; -1 for no points.
[[nodiscard]] int affine_dimension(const std::vector<const RationalPoint*>& points);

/**
 * Text format:
 *
 *     d p h
 *     <p lines of d rationals>          points
 *     <h lines of d+1 rationals>        normal then offset, meaning a·x <= b
 *
 * A rational is an integer or "num/den".  '#' starts a comment.
 */
[[nodiscard]] GeometricInstance parse_geometry(std::istream& in);
[[nodiscard]] GeometricInstance parse_geometry(std::string_view text);
void write_geometry(std::ostream& out, const GeometricInstance& inst);

[[nodiscard]] Rational parse_rational(std::string_view token);
[[nodiscard]] std::string format_rational(const Rational& q);

}  // namespace polycomplete
