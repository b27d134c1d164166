/**
 * Dense bit-packed matrices over Z_2.
 *
 * Rows are stored as contiguous runs of 64-bit words.  Bits past the last
 * column of a row are always zero, so word-wise comparison and popcount are
 * exact.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace polycomplete {

class Gf2Matrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    /**
     * Build a matrix from rows written as strings of '0' and '1'.  All rows
     * must have the same length; throws std::invalid_argument otherwise.
     */
    static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows);
    static Gf2Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    [[nodiscard]] std::span<const Word> row(std::size_t r) const;

    /// row(dst) ^= row(src)
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    [[nodiscard]] std::size_t row_popcount(std::size_t r) const;
    [[nodiscard]] std::size_t col_popcount(std::size_t c) const;
    [[nodiscard]] bool row_is_zero(std::size_t r) const;

    [[nodiscard]] Gf2Matrix transposed() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> data_;
};

/// Rank over Z_2.  The argument is not modified.
[[nodiscard]] std::size_t rank(const Gf2Matrix& m);

/// Dimension of the kernel of the column action: cols() - rank().
[[nodiscard]] std::size_t nullity(const Gf2Matrix& m);

}  // namespace polycomplete
