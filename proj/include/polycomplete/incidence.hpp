/**
 * Vertex-facet incidence matrix minors.
 *
 * A minor is a claimed polytope dimension d together with an m x n 0/1
 * matrix.  Row i is read as the set of vertices (1-based column labels) that
 * lie on the i-th given facet.  Rows need not be distinct.
 *
 * Whether the matrix really is a minor of some d-polytope's incidence matrix
 * is NOT checked: there is no known polynomial test for it.  Every decision
 * made by this library is relative to that caller-supplied promise.  The
 * geometry front-end (geometry.hpp) is the checkable path.
 */
#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycomplete/gf2.hpp"
#include "polycomplete/simplex.hpp"

namespace polycomplete {

class IncidenceMinor {
public:
    IncidenceMinor() = default;

    /// Throws std::invalid_argument if dim < 0 or a label list has the wrong length.
    IncidenceMinor(int dim, Gf2Matrix bits, std::vector<std::string> row_labels = {},
                   std::vector<std::string> col_labels = {});

    /// Convenience: rows as '0'/'1' strings.
    static IncidenceMinor from_strings(int dim, std::initializer_list<std::string_view> rows);
    /// Rows as vertex sets over [n].
    static IncidenceMinor from_supports(int dim, std::size_t n, const std::vector<std::vector<Vertex>>& rows);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t rows() const noexcept { return bits_.rows(); }
    [[nodiscard]] std::size_t cols() const noexcept { return bits_.cols(); }
    [[nodiscard]] const Gf2Matrix& bits() const noexcept { return bits_; }

    /// 0-based row and column indices.
    [[nodiscard]] bool at(std::size_t row, std::size_t col) const { return bits_.get(row, col); }

    /// Vertex labels (1-based) of the given 0-based row.
    [[nodiscard]] std::vector<Vertex> row_support(std::size_t row) const;

    /// Empty when no explicit labels were given; defaults are "1".."m" and "1".."n".
    [[nodiscard]] const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    [[nodiscard]] const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    [[nodiscard]] std::string row_label(std::size_t row) const;
    [[nodiscard]] std::string col_label(std::size_t col) const;

    [[nodiscard]] IncidenceMinor with_dim(int dim) const;

    friend bool operator==(const IncidenceMinor&, const IncidenceMinor&) = default;

private:
    int dim_ = 0;
    Gf2Matrix bits_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

struct SizeStats {
    std::size_t s = 0;        ///< largest row support
    std::size_t s_col = 0;    ///< largest column support
    std::size_t s_prime = 0;  ///< min(s, s_col)
};

/// Malformed incidence or geometry text, with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/**
 * Read the plain-text incidence format:
 *
 *     # optional comment lines
 *     d m n
 *     <m lines of n characters from {0,1}>
 *
 * A '#' starts a comment that runs to the end of the line.  Trailing blanks
 * are ignored.  When n > 0, blank lines are skipped; when n == 0 each row is
 * an empty line.
 */
[[nodiscard]] IncidenceMinor parse_incidence(std::istream& in);
[[nodiscard]] IncidenceMinor parse_incidence(std::string_view text);

/// Inverse of parse_incidence: header then one line per row, LF endings.
void write_incidence(std::ostream& out, const IncidenceMinor& minor);
[[nodiscard]] std::string to_text(const IncidenceMinor& minor);

/// The n x m transpose, an incidence minor of the dual polytope.  Same d.
[[nodiscard]] IncidenceMinor transpose(const IncidenceMinor& minor);

[[nodiscard]] SizeStats size_stats(const IncidenceMinor& minor);

/**
 * True when `b` can be obtained from `a` by permuting rows and columns.
 * Brute force over column permutations guided by column degrees; meant for
 * fixture-sized matrices (n <= 16 or so).
 */
[[nodiscard]] bool permutation_equivalent(const IncidenceMinor& a, const IncidenceMinor& b);

}  // namespace polycomplete
