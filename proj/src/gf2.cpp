#include "polycomplete/gf2.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace polycomplete {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + Gf2Matrix::kWordBits - 1) / Gf2Matrix::kWordBits;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Index of the lowest set bit of a packed row, or kNone if the row is zero.

std::size_t lowest_bit(std::span<const Gf2Matrix::Word> words, std::size_t first_word = 0) {
    for (std::size_t w = first_word; w < words.size(); ++w) {
        if (words[w] != 0)
            return w * Gf2Matrix::kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
    }
    return kNone;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Gf2Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (auto text : rows) {
        if (text.size() != cols)
            throw std::invalid_argument("Gf2Matrix::from_strings: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (text[c] == '1')
                m.set(r, c);
            else if (text[c] != '0')
                throw std::invalid_argument("Gf2Matrix::from_strings: expected '0' or '1'");
        }
        ++r;
    }
    return m;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix::get: index out of range");
    return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix::set: index out of range");
    Word mask = Word{1} << (c % kWordBits);
    Word& w = data_[r * words_ + c / kWordBits];
    w = value ? (w | mask) : (w & ~mask);
}

std::span<const Gf2Matrix::Word> Gf2Matrix::row(std::size_t r) const {
    if (r >= rows_)
        throw std::out_of_range("Gf2Matrix::row: index out of range");
    return {data_.data() + r * words_, words_};
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
    if (src >= rows_ || dst >= rows_)
        throw std::out_of_range("Gf2Matrix::xor_row_into: index out of range");
    Word* d = data_.data() + dst * words_;
    const Word* s = data_.data() + src * words_;
    for (std::size_t w = 0; w < words_; ++w)
        d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a >= rows_ || b >= rows_)
        throw std::out_of_range("Gf2Matrix::swap_rows: index out of range");
    if (a == b)
        return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

std::size_t Gf2Matrix::row_popcount(std::size_t r) const {
    std::size_t count = 0;
    for (Word w : row(r))
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

std::size_t Gf2Matrix::col_popcount(std::size_t c) const {
    if (c >= cols_)
        throw std::out_of_range("Gf2Matrix::col_popcount: index out of range");
    std::size_t count = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        count += (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    return count;
}

bool Gf2Matrix::row_is_zero(std::size_t r) const {
    auto words = row(r);
    return std::all_of(words.begin(), words.end(), [](Word w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const Word* src = data_.data() + r * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = src[w];
            while (bits != 0) {
                std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.data_[c * t.words_ + r / kWordBits] |= Word{1} << (r % kWordBits);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

std::size_t rank(const Gf2Matrix& m) {
    // Eliminate over the orientation with fewer rows.
    std::optional<Gf2Matrix> flipped;
    const Gf2Matrix& work = m.rows() > m.cols() ? flipped.emplace(m.transposed()) : m;
    const std::size_t words = work.words_per_row();

    // Echelon basis keyed by lowest set bit.  A reduced row's lowest bit
    // strictly increases with every XOR, so reduction terminates.
    std::vector<Gf2Matrix::Word> basis;
    basis.reserve(std::min(work.rows(), work.cols()) * words);
    std::vector<std::size_t> pivot_slot(work.cols(), kNone);
    std::vector<Gf2Matrix::Word> scratch(words);

    std::size_t found = 0;
    for (std::size_t r = 0; r < work.rows(); ++r) {
        auto src = work.row(r);
        std::copy(src.begin(), src.end(), scratch.begin());
        std::size_t low = lowest_bit(scratch);
        while (low != kNone && pivot_slot[low] != kNone) {
            const Gf2Matrix::Word* b = basis.data() + pivot_slot[low] * words;
            for (std::size_t w = low / Gf2Matrix::kWordBits; w < words; ++w)
                scratch[w] ^= b[w];
            low = lowest_bit(scratch, low / Gf2Matrix::kWordBits);
        }
        if (low == kNone)
            continue;
        pivot_slot[low] = found++;
        basis.insert(basis.end(), scratch.begin(), scratch.end());
    }
    return found;
}

std::size_t nullity(const Gf2Matrix& m) {
    return m.cols() - rank(m);
}

}  // namespace polycomplete
