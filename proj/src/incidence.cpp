#include "polycomplete/incidence.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

namespace polycomplete {

IncidenceMinor::IncidenceMinor(int dim, Gf2Matrix bits, std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels)
    : dim_(dim), bits_(std::move(bits)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    if (dim_ < 0)
        throw std::invalid_argument("IncidenceMinor: dimension must be nonnegative");
    if (!row_labels_.empty() && row_labels_.size() != bits_.rows())
        throw std::invalid_argument("IncidenceMinor: row label count does not match row count");
    if (!col_labels_.empty() && col_labels_.size() != bits_.cols())
        throw std::invalid_argument("IncidenceMinor: column label count does not match column count");
}

IncidenceMinor IncidenceMinor::from_strings(int dim, std::initializer_list<std::string_view> rows) {
    return IncidenceMinor(dim, Gf2Matrix::from_strings(rows));
}

IncidenceMinor IncidenceMinor::from_supports(int dim, std::size_t n, const std::vector<std::vector<Vertex>>& rows) {
    Gf2Matrix bits(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (Vertex v : rows[r]) {
            if (v == 0 || v > n)
                throw std::invalid_argument("IncidenceMinor::from_supports: vertex out of range");
            bits.set(r, v - 1);
        }
    }
    return IncidenceMinor(dim, std::move(bits));
}

std::vector<Vertex> IncidenceMinor::row_support(std::size_t row) const {
    std::vector<Vertex> out;
    for (std::size_t c = 0; c < cols(); ++c)
        if (bits_.get(row, c))
            out.push_back(static_cast<Vertex>(c + 1));
    return out;
}

std::string IncidenceMinor::row_label(std::size_t row) const {
    return row_labels_.empty() ? std::to_string(row + 1) : row_labels_.at(row);
}

std::string IncidenceMinor::col_label(std::size_t col) const {
    return col_labels_.empty() ? std::to_string(col + 1) : col_labels_.at(col);
}

IncidenceMinor IncidenceMinor::with_dim(int dim) const {
    return IncidenceMinor(dim, bits_, row_labels_, col_labels_);
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

// Strip a trailing comment and trailing blanks.  Returns the payload.
std::string_view payload(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
        line.remove_suffix(1);
    return line;
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

std::size_t parse_count(std::string_view token, std::size_t line, std::size_t column, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, column, std::string("expected a nonnegative integer for ") + what);
    return value;
}

}  // namespace

IncidenceMinor parse_incidence(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t d = 0, m = 0, n = 0;
    std::size_t header_line = 0;
    Gf2Matrix bits;
    std::size_t row = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view full(raw);
        std::string_view line = payload(full);
        bool comment_only = !full.empty() && full.front() == '#';

        if (!have_header) {
            if (comment_only || is_blank(line))
                continue;
            std::vector<std::pair<std::string_view, std::size_t>> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                    ++i;
                if (start < i)
                    tokens.emplace_back(line.substr(start, i - start), start + 1);
            }
            if (tokens.size() != 3)
                throw ParseError(line_no, 1, "header must be \"d m n\"");
            d = parse_count(tokens[0].first, line_no, tokens[0].second, "d");
            m = parse_count(tokens[1].first, line_no, tokens[1].second, "m");
            n = parse_count(tokens[2].first, line_no, tokens[2].second, "n");
            if (d > 1024)
                throw ParseError(line_no, tokens[0].second, "dimension is unreasonably large");
            bits = Gf2Matrix(m, n);
            have_header = true;
            header_line = line_no;
            continue;
        }

        if (comment_only)
            continue;
        if (n > 0 && is_blank(line))
            continue;
        if (n == 0 && is_blank(line) && row >= m)
            continue;
        if (row >= m)
            throw ParseError(line_no, 1, "more rows than the header's m = " + std::to_string(m));
        for (std::size_t c = 0; c < line.size(); ++c) {
            char ch = line[c];
            if (ch != '0' && ch != '1')
                throw ParseError(line_no, c + 1, std::string("unexpected character '") + ch + "'");
            if (c >= n)
                throw ParseError(line_no, c + 1, "row longer than the header's n = " + std::to_string(n));
            if (ch == '1')
                bits.set(row, c);
        }
        if (line.size() != n)
            throw ParseError(line_no, line.size() + 1,
                             "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(n));
        ++row;
    }

    if (!have_header)
        throw ParseError(line_no + 1, 1, "missing header \"d m n\"");
    if (row != m)
        throw ParseError(line_no + 1, 1,
                         "expected " + std::to_string(m) + " rows after the header on line " +
                             std::to_string(header_line) + ", found " + std::to_string(row));
    return IncidenceMinor(static_cast<int>(d), std::move(bits));
}

IncidenceMinor parse_incidence(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_incidence(in);
}

void write_incidence(std::ostream& out, const IncidenceMinor& minor) {
    out << minor.dim() << ' ' << minor.rows() << ' ' << minor.cols() << '\n';
    std::string line(minor.cols(), '0');
    for (std::size_t r = 0; r < minor.rows(); ++r) {
        for (std::size_t c = 0; c < minor.cols(); ++c)
            line[c] = minor.at(r, c) ? '1' : '0';
        out << line << '\n';
    }
}

std::string to_text(const IncidenceMinor& minor) {
    std::ostringstream out;
    write_incidence(out, minor);
    return out.str();
}

IncidenceMinor transpose(const IncidenceMinor& minor) {
    return IncidenceMinor(minor.dim(), minor.bits().transposed(), minor.col_labels(), minor.row_labels());
}

SizeStats size_stats(const IncidenceMinor& minor) {
    SizeStats stats;
    for (std::size_t r = 0; r < minor.rows(); ++r)
        stats.s = std::max(stats.s, minor.bits().row_popcount(r));
    for (std::size_t c = 0; c < minor.cols(); ++c)
        stats.s_col = std::max(stats.s_col, minor.bits().col_popcount(c));
    stats.s_prime = std::min(stats.s, stats.s_col);
    return stats;
}

bool permutation_equivalent(const IncidenceMinor& a, const IncidenceMinor& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    auto degree_profile = [](const IncidenceMinor& x) {
        std::vector<std::size_t> deg(x.cols());
        for (std::size_t c = 0; c < x.cols(); ++c)
            deg[c] = x.bits().col_popcount(c);
        return deg;
    };
    auto deg_a = degree_profile(a);
    auto deg_b = degree_profile(b);
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }

    // Row projections onto the columns assigned so far, as growing bit strings.
    std::vector<std::string> proj_a(m), proj_b(m);
    std::vector<bool> used(n, false);

    std::function<bool(std::size_t)> assign = [&](std::size_t col) -> bool {
        if (col == n)
            return true;
        for (std::size_t target = 0; target < n; ++target) {
            if (used[target] || deg_b[target] != deg_a[col])
                continue;
            for (std::size_t r = 0; r < m; ++r) {
                proj_a[r].push_back(a.at(r, col) ? '1' : '0');
                proj_b[r].push_back(b.at(r, target) ? '1' : '0');
            }
            auto sa = proj_a, sb = proj_b;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa == sb) {
                used[target] = true;
                if (assign(col + 1))
                    return true;
                used[target] = false;
            }
            for (std::size_t r = 0; r < m; ++r) {
                proj_a[r].pop_back();
                proj_b[r].pop_back();
            }
        }
        return false;
    };
    return assign(0);
}

}  // namespace polycomplete
