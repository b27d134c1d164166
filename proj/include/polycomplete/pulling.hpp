/**
 * Pulling complex of an incidence minor and certificates of incompleteness.
 *
 * For a set system F over [n] and a dimension d, the pulling complex is the
 * set of d-subsets {v_1 < ... < v_d} for which there are rows F_1, ..., F_d
 * with v_i = min(F_1 ∩ ... ∩ F_i) for every i.  When J is the complete
 * incidence matrix of a d-polytope this is exactly the set of facets of the
 * pulling triangulation of its boundary (w.r.t. the column order).  For any
 * minor of it, the complex is a subcomplex of that triangulation, and a proper
 * one unless the minor is complete.
 *
 * That gives two polynomially checkable witnesses that a minor is incomplete:
 *  - find_pulling_facet() fails (the complex has no facet avoiding vertex 1);
 *  - some (d-1)-subset lies in exactly one facet of the complex, whereas in a
 *    triangulated sphere every ridge lies in exactly two.
 *
 * Both are sound only under the caller's promise that J is a minor of some
 * d-polytope's incidence matrix.
 */
#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polycomplete/incidence.hpp"
#include "polycomplete/simplex.hpp"

namespace polycomplete {

/**
 * Membership of `candidate` in the pulling complex, by a single greedy pass:
 * for i = 1..d pick the first row F containing {v_i, ..., v_d} with
 * v_i = min(F_1 ∩ ... ∩ F_{i-1} ∩ F).  Throws std::invalid_argument if the
 * candidate does not have d vertices in [n].
 */
[[nodiscard]] bool is_pulling_facet(int d, const IncidenceMinor& minor, const Simplex& candidate);

/**
 * A facet of the pulling complex not containing vertex 1, found greedily by
 * shrinking S = [n] with the row that avoids min S and meets S in the most
 * vertices (lowest row index on ties).  std::nullopt means "incomplete".
 */
[[nodiscard]] std::optional<Simplex> find_pulling_facet(int d, const IncidenceMinor& minor);

/// Number of vertices v outside `ridge` with ridge ∪ {v} in the pulling complex.
[[nodiscard]] std::size_t ridge_cofacet_count(int d, const IncidenceMinor& minor, const Simplex& ridge);

/// Facets of the pulling complex that contain `ridge`, in increasing order.
[[nodiscard]] std::vector<Simplex> ridge_cofacets(int d, const IncidenceMinor& minor, const Simplex& ridge);

struct PullingCertificate {
    enum class Kind { EmptyPullingComplex, BoundaryRidge };

    Kind kind = Kind::EmptyPullingComplex;
    Simplex ridge;  ///< only meaningful for BoundaryRidge

    static PullingCertificate empty_complex() { return {}; }
    static PullingCertificate boundary_ridge(Simplex r) { return {Kind::BoundaryRidge, std::move(r)}; }

    friend bool operator==(const PullingCertificate&, const PullingCertificate&) = default;
};

/**
 * Search for a certificate of incompleteness.
 *
 * If find_pulling_facet() fails, returns the empty-complex certificate.
 * Otherwise walks the facets of the pulling complex reachable from the found
 * facet through shared ridges, always expanding the lexicographically
 * smallest pending facet and checking its ridges in lexicographic order.  The
 * first ridge with exactly one cofacet is returned.  std::nullopt means every
 * reached ridge has two or more cofacets, which is what a complete minor
 * produces.
 */
[[nodiscard]] std::optional<PullingCertificate> find_certificate(int d, const IncidenceMinor& minor);

/**
 * Re-check a certificate.  Throws std::invalid_argument if a ridge
 * certificate has the wrong size or out-of-range labels.
 */
[[nodiscard]] bool verify_certificate(int d, const IncidenceMinor& minor, const PullingCertificate& cert);

/// One line: "EMPTY" or "RIDGE v1 ... v(d-1)".
[[nodiscard]] std::string to_text(const PullingCertificate& cert);
void write_certificate(std::ostream& out, const PullingCertificate& cert);

/// Inverse of write_certificate; '#' comments and blank lines are skipped.  Throws ParseError.
[[nodiscard]] PullingCertificate parse_certificate(std::istream& in);
[[nodiscard]] PullingCertificate parse_certificate(std::string_view text);

}  // namespace polycomplete
