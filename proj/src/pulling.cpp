#include "polycomplete/pulling.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polycomplete {

namespace {

using Word = Gf2Matrix::Word;
constexpr std::size_t kBits = Gf2Matrix::kWordBits;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Working vertex set over [n] in the same packing as a Gf2Matrix row.
class VertexSet {
public:
    VertexSet(std::size_t n, bool full) : words_((n + kBits - 1) / kBits, full ? ~Word{0} : Word{0}) {
        if (full && n % kBits != 0)
            words_.back() = (Word{1} << (n % kBits)) - 1;
    }

    void intersect(std::span<const Word> row) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= row[w];
    }

    // 0-based index of the smallest element, or kNone.
    [[nodiscard]] std::size_t min() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0)
                return w * kBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return kNone;
    }

    [[nodiscard]] std::size_t overlap(std::span<const Word> row) const {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            count += static_cast<std::size_t>(std::popcount(words_[w] & row[w]));
        return count;
    }

    // True iff this ∩ row has no element below index `bound` (0-based).
    [[nodiscard]] bool meets_nothing_below(std::span<const Word> row, std::size_t bound) const {
        for (std::size_t w = 0; w * kBits < bound; ++w) {
            Word both = words_[w] & row[w];
            std::size_t stop = bound - w * kBits;
            if (stop < kBits)
                both &= (Word{1} << stop) - 1;
            if (both != 0)
                return false;
        }
        return true;
    }

private:
    std::vector<Word> words_;
};

bool has_bit(std::span<const Word> row, std::size_t index) {
    return (row[index / kBits] >> (index % kBits)) & 1U;
}

void require_positive_dim(int d, const char* where) {
    if (d < 1)
        throw std::invalid_argument(std::string(where) + ": dimension must be at least 1");
}

void require_in_range(const Simplex& s, const IncidenceMinor& minor, const char* where) {
    for (Vertex v : s)
        if (v > minor.cols())
            throw std::invalid_argument(std::string(where) + ": vertex " + std::to_string(v) + " is out of range");
}

}  // namespace

bool is_pulling_facet(int d, const IncidenceMinor& minor, const Simplex& candidate) {
    require_positive_dim(d, "is_pulling_facet");
    const auto dd = static_cast<std::size_t>(d);
    if (candidate.size() != dd)
        throw std::invalid_argument("is_pulling_facet: candidate must have exactly d vertices");
    require_in_range(candidate, minor, "is_pulling_facet");

    const Gf2Matrix& bits = minor.bits();

    // families[i]: rows containing {v_i, ..., v_d} (0-based i), built from the back.
    std::vector<std::vector<std::size_t>> families(dd);
    for (std::size_t i = dd; i-- > 0;) {
        const std::size_t col = candidate[i] - 1;
        if (i + 1 == dd) {
            for (std::size_t r = 0; r < bits.rows(); ++r)
                if (has_bit(bits.row(r), col))
                    families[i].push_back(r);
        } else {
            for (std::size_t r : families[i + 1])
                if (has_bit(bits.row(r), col))
                    families[i].push_back(r);
        }
        if (families[i].empty())
            return false;
    }

    // Every chosen row contains {v_i..v_d}, so the running intersection always
    // contains v_i; only smaller elements can spoil the minimum.
    VertexSet running(minor.cols(), true);
    for (std::size_t i = 0; i < dd; ++i) {
        const std::size_t target = candidate[i] - 1;
        std::size_t chosen = kNone;
        for (std::size_t r : families[i]) {
            if (running.meets_nothing_below(bits.row(r), target)) {
                chosen = r;
                break;
            }
        }
        if (chosen == kNone)
            return false;
        running.intersect(bits.row(chosen));
    }
    return true;
}

std::optional<Simplex> find_pulling_facet(int d, const IncidenceMinor& minor) {
    require_positive_dim(d, "find_pulling_facet");
    const Gf2Matrix& bits = minor.bits();

    VertexSet remaining(minor.cols(), true);
    std::vector<Vertex> facet;
    facet.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const std::size_t lowest = remaining.min();
        if (lowest == kNone)
            return std::nullopt;
        std::size_t best_row = kNone;
        std::size_t best_overlap = 0;
        for (std::size_t r = 0; r < bits.rows(); ++r) {
            auto row = bits.row(r);
            if (has_bit(row, lowest))
                continue;
            std::size_t overlap = remaining.overlap(row);
            if (overlap > best_overlap) {
                best_overlap = overlap;
                best_row = r;
            }
        }
        if (best_row == kNone)
            return std::nullopt;
        remaining.intersect(bits.row(best_row));
        facet.push_back(static_cast<Vertex>(remaining.min() + 1));
    }
    return Simplex(std::move(facet));
}

std::vector<Simplex> ridge_cofacets(int d, const IncidenceMinor& minor, const Simplex& ridge) {
    require_positive_dim(d, "ridge_cofacets");
    if (ridge.size() + 1 != static_cast<std::size_t>(d))
        throw std::invalid_argument("ridge_cofacets: ridge must have exactly d-1 vertices");
    require_in_range(ridge, minor, "ridge_cofacets");

    std::vector<Simplex> out;
    for (std::size_t c = 1; c <= minor.cols(); ++c) {
        const auto v = static_cast<Vertex>(c);
        if (ridge.contains(v))
            continue;
        Simplex candidate = ridge.with(v);
        if (is_pulling_facet(d, minor, candidate))
            out.push_back(std::move(candidate));
    }
    return out;
}

std::size_t ridge_cofacet_count(int d, const IncidenceMinor& minor, const Simplex& ridge) {
    return ridge_cofacets(d, minor, ridge).size();
}

std::optional<PullingCertificate> find_certificate(int d, const IncidenceMinor& minor) {
    auto start = find_pulling_facet(d, minor);
    if (!start)
        return PullingCertificate::empty_complex();

    std::set<Simplex> pending{*start};
    std::set<Simplex> discovered{*start};
    std::set<Simplex> checked_ridges;

    while (!pending.empty()) {
        Simplex facet = *pending.begin();
        pending.erase(pending.begin());

        std::vector<Simplex> ridges;
        for (std::size_t i = facet.size(); i-- > 0;)
            ridges.push_back(facet.without(i));
        std::sort(ridges.begin(), ridges.end());

        for (const Simplex& ridge : ridges) {
            if (!checked_ridges.insert(ridge).second)
                continue;
            auto cofacets = ridge_cofacets(d, minor, ridge);
            if (cofacets.size() == 1)
                return PullingCertificate::boundary_ridge(ridge);
            for (auto& next : cofacets)
                if (discovered.insert(next).second)
                    pending.insert(std::move(next));
        }
    }
    return std::nullopt;
}

bool verify_certificate(int d, const IncidenceMinor& minor, const PullingCertificate& cert) {
    require_positive_dim(d, "verify_certificate");
    if (cert.kind == PullingCertificate::Kind::EmptyPullingComplex)
        return !find_pulling_facet(d, minor).has_value();
    if (cert.ridge.size() + 1 != static_cast<std::size_t>(d))
        throw std::invalid_argument("verify_certificate: ridge must have exactly d-1 vertices");
    return ridge_cofacet_count(d, minor, cert.ridge) == 1;
}

std::string to_text(const PullingCertificate& cert) {
    if (cert.kind == PullingCertificate::Kind::EmptyPullingComplex)
        return "EMPTY";
    std::string out = "RIDGE";
    for (Vertex v : cert.ridge)
        out += ' ' + std::to_string(v);
    return out;
}

void write_certificate(std::ostream& out, const PullingCertificate& cert) {
    out << to_text(cert) << '\n';
}

PullingCertificate parse_certificate(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<PullingCertificate> result;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (start < i)
                tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (tokens.empty())
            continue;
        if (result)
            throw ParseError(line_no, tokens.front().second, "unexpected content after the certificate");

        if (tokens[0].first == "EMPTY") {
            if (tokens.size() != 1)
                throw ParseError(line_no, tokens[1].second, "EMPTY takes no vertices");
            result = PullingCertificate::empty_complex();
        } else if (tokens[0].first == "RIDGE") {
            std::vector<Vertex> vertices;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                auto [text, column] = tokens[t];
                Vertex v = 0;
                auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
                if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
                    throw ParseError(line_no, column, "expected a positive vertex label");
                if (!vertices.empty() && vertices.back() >= v)
                    throw ParseError(line_no, column, "ridge vertices must be strictly increasing");
                vertices.push_back(v);
            }
            result = PullingCertificate::boundary_ridge(Simplex(std::move(vertices)));
        } else {
            throw ParseError(line_no, tokens[0].second, "expected EMPTY or RIDGE");
        }
    }
    if (!result)
        throw ParseError(line_no + 1, 1, "missing certificate");
    return *result;
}

PullingCertificate parse_certificate(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_certificate(in);
}

}  // namespace polycomplete
