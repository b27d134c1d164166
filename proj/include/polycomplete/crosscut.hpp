/**
 * Completeness of an incidence minor via Z_2 homology of its crosscut complex.
 *
 * The crosscut complex of J is the simplicial complex of all vertex sets
 * contained in at least one row of J.  A minor J of a d-polytope's incidence
 * matrix is complete exactly when the reduced homology of that complex in
 * degree d-1 is nonzero.  Homology is computed from the two boundary
 * matrices around degree d-1 by Gaussian elimination over Z_2.
 *
 * Reduced homology is used throughout: the map from vertices to the empty
 * face (the augmentation) is the boundary of degree 0, so the case d = 1
 * (a segment, whose boundary is two points) is decided by the same test.
 *
 * For d = 0 there is no homological criterion; by convention a minor is
 * complete for d = 0 iff it has exactly one column.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polycomplete/gf2.hpp"
#include "polycomplete/incidence.hpp"
#include "polycomplete/simplex.hpp"

namespace polycomplete {

/// All k-dimensional faces of a crosscut complex, lexicographically sorted.
class FaceLayer {
public:
    FaceLayer() = default;
    FaceLayer(int k, std::vector<Simplex> sorted_unique_faces);

    [[nodiscard]] int dim() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return faces_.size(); }
    [[nodiscard]] const std::vector<Simplex>& faces() const noexcept { return faces_; }
    [[nodiscard]] const Simplex& operator[](std::size_t i) const { return faces_[i]; }

    /// Position of `face`, or size() if absent.
    [[nodiscard]] std::size_t find(const Simplex& face) const;

private:
    int k_ = -1;
    std::vector<Simplex> faces_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/**
 * Every (k+1)-subset of [n] contained in at least one row of J.  k = -1
 * yields the empty face when J has at least one row.  Requires
 * -1 <= k; for k >= n the result is empty.
 */
[[nodiscard]] FaceLayer enumerate_faces(const IncidenceMinor& minor, int k);

/**
 * Z_2 boundary map from `upper` (k-faces, columns) to `lower` ((k-1)-faces,
 * rows).  Entry (i, j) is 1 iff lower[i] is upper[j] minus one vertex.
 * Throws std::invalid_argument if the dimensions don't differ by one or a
 * codimension-1 face of `upper` is missing from `lower`.
 */
[[nodiscard]] Gf2Matrix boundary_matrix(const FaceLayer& upper, const FaceLayer& lower);

enum class Side { Primal, Dual };
enum class SidePolicy { Auto, Primal, Dual };

[[nodiscard]] std::string_view to_string(Side side) noexcept;

struct MatrixShape {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// Everything the homology test computed, for reporting.
struct HomologyReport {
    bool complete = false;
    int dim = 0;
    Side side = Side::Primal;
    SizeStats stats;                ///< statistics of the matrix actually used
    std::size_t facets_used = 0;    ///< row count m of the matrix actually used
    MatrixShape top;                ///< boundary from (d)-faces to (d-1)-faces
    MatrixShape bottom;             ///< boundary from (d-1)-faces to (d-2)-faces
    std::size_t top_rank = 0;
    std::size_t bottom_nullity = 0;
    bool by_convention = false;     ///< decided without homology (d = 0 or no rows)
};

/**
 * Reduced Z_2 Betti number in degree d-1 of the crosscut complex is
 * nonzero.  Throws std::invalid_argument for d < 0.
 */
[[nodiscard]] HomologyReport completeness_via_homology(int d, const IncidenceMinor& minor);

/**
 * Completeness test on the cheaper of J and its transpose.  With Auto, the
 * primal side is used when s <= s_col (ties go to the primal side).  The
 * answer does not depend on the side.
 */
[[nodiscard]] HomologyReport decide_report(int d, const IncidenceMinor& minor, SidePolicy policy = SidePolicy::Auto);
[[nodiscard]] bool decide(int d, const IncidenceMinor& minor);
[[nodiscard]] inline bool decide(const IncidenceMinor& minor) { return decide(minor.dim(), minor); }

}  // namespace polycomplete
