#include "polycomplete/fixtures.hpp"

#include <stdexcept>
#include <vector>

namespace polycomplete {

namespace {

using boost::multiprecision::cpp_int;

void require_dim(int d, int lo, const char* what) {
    if (d < lo || d > kMaxFixtureDim)
        throw std::invalid_argument(std::string(what) + ": dimension must be in [" + std::to_string(lo) + ", " +
                                    std::to_string(kMaxFixtureDim) + "]");
}

// Gale's evenness condition for a sorted d-subset of [n].
bool gale_even(const std::vector<Vertex>& subset, Vertex n) {
    std::size_t i = 0;
    while (i < subset.size()) {
        std::size_t j = i;
        while (j + 1 < subset.size() && subset[j + 1] == subset[j] + 1)
            ++j;
        bool touches_end = subset[i] == 1 || subset[j] == n;
        if (!touches_end && (j - i + 1) % 2 != 0)
            return false;
        i = j + 1;
    }
    return true;
}

std::vector<Rational> unit(std::size_t d, std::size_t k, int sign = 1) {
    std::vector<Rational> v(d, 0);
    v[k] = sign;
    return v;
}

// A nonzero vector orthogonal to every row; rows must have rank cols-1.
std::vector<Rational> null_vector(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r])
            x *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c] == 0)
                continue;
            Rational f = rows[q][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[q][k] -= f * rows[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() + 1 != cols)
        throw std::logic_error("null_vector: expected a one-dimensional kernel");
    std::size_t free_col = 0;
    for (std::size_t k = 0; k < pivot_col.size() && pivot_col[k] == free_col; ++k)
        ++free_col;
    std::vector<Rational> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        v[pivot_col[k]] = -rows[k][free_col];
    return v;
}

// Scale to coprime integers.
void make_primitive(Halfspace& h) {
    cpp_int lcm = 1;
    auto fold_den = [&](const Rational& q) { lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q)); };
    for (const auto& a : h.normal)
        fold_den(a);
    fold_den(h.offset);
    cpp_int g = 0;
    auto fold_num = [&](const Rational& q) {
        cpp_int v = boost::multiprecision::numerator(Rational(q * lcm));
        g = boost::multiprecision::gcd(g, v < 0 ? cpp_int(-v) : v);
    };
    for (const auto& a : h.normal)
        fold_num(a);
    fold_num(h.offset);
    if (g == 0)
        g = 1;
    Rational scale = Rational(lcm, g);
    for (auto& a : h.normal)
        a *= scale;
    h.offset *= scale;
}

}  // namespace

std::string FixtureSpec::name() const {
    switch (family) {
        case Family::Simplex: return "simplex(" + std::to_string(d) + ")";
        case Family::CubeKM: return "cube-km";
        case Family::Hypercube: return "hypercube(" + std::to_string(d) + ")";
        case Family::CrossPolytope: return "cross(" + std::to_string(d) + ")";
        case Family::Cyclic: return "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")";
        case Family::Prism: return "prism(" + (base ? base->name() : std::string("?")) + ")";
    }
    return "?";
}

IncidenceMinor cyclic_incidence(int d, int n) {
    if (d < 2 || n <= d)
        throw std::invalid_argument("cyclic_incidence: requires n > d >= 2");
    const auto nn = static_cast<Vertex>(n);
    const auto dd = static_cast<std::size_t>(d);
    std::vector<std::vector<Vertex>> rows;
    std::vector<Vertex> subset(dd);
    for (std::size_t i = 0; i < dd; ++i)
        subset[i] = static_cast<Vertex>(i + 1);
    while (true) {
        if (gale_even(subset, nn))
            rows.push_back(subset);
        std::size_t i = dd;
        while (i > 0 && subset[i - 1] == nn - dd + i)
            --i;
        if (i == 0)
            break;
        ++subset[i - 1];
        for (std::size_t j = i; j < dd; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return IncidenceMinor::from_supports(d, static_cast<std::size_t>(n), rows);
}

IncidenceMinor cube_km() {
    return IncidenceMinor::from_supports(
        3, 8, {{1, 2, 3, 4}, {1, 2, 7, 8}, {1, 4, 5, 8}, {2, 3, 6, 7}, {3, 4, 5, 6}, {5, 6, 7, 8}});
}

IncidenceMinor simplex_incidence(int d) {
    require_dim(d, 1, "simplex_incidence");
    const auto n = static_cast<std::size_t>(d + 1);
    Gf2Matrix bits(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            bits.set(r, c, r != c);
    return IncidenceMinor(d, std::move(bits));
}

IncidenceMinor hypercube_incidence(int d) {
    require_dim(d, 1, "hypercube_incidence");
    const std::size_t n = std::size_t{1} << d;
    Gf2Matrix bits(2 * static_cast<std::size_t>(d), n);
    for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j)
        for (std::size_t k = 0; k < n; ++k)
            bits.set(2 * j + ((k >> j) & 1U), k);
    return IncidenceMinor(d, std::move(bits));
}

IncidenceMinor cross_polytope_incidence(int d) {
    require_dim(d, 1, "cross_polytope_incidence");
    const auto dd = static_cast<std::size_t>(d);
    const std::size_t m = std::size_t{1} << d;
    Gf2Matrix bits(m, 2 * dd);
    for (std::size_t mask = 0; mask < m; ++mask)
        for (std::size_t j = 0; j < dd; ++j)
            bits.set(mask, 2 * j + ((mask >> j) & 1U));
    return IncidenceMinor(d, std::move(bits));
}

IncidenceMinor prism(const IncidenceMinor& minor) {
    const std::size_t n = minor.cols();
    const std::size_t m = minor.rows();
    Gf2Matrix bits(m + 2, 2 * n);
    for (std::size_t c = 0; c < n; ++c) {
        bits.set(0, c);
        bits.set(1, n + c);
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (minor.at(r, c)) {
                bits.set(r + 2, c);
                bits.set(r + 2, n + c);
            }
    return IncidenceMinor(minor.dim() + 1, std::move(bits));
}

IncidenceMinor delete_minor(const IncidenceMinor& minor, const std::set<std::size_t>& rows,
                            const std::set<std::size_t>& cols) {
    if (!rows.empty() && *rows.rbegin() >= minor.rows())
        throw std::out_of_range("delete_minor: row index out of range");
    if (!cols.empty() && *cols.rbegin() >= minor.cols())
        throw std::out_of_range("delete_minor: column index out of range");

    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t r = 0; r < minor.rows(); ++r)
        if (!rows.contains(r))
            keep_rows.push_back(r);
    for (std::size_t c = 0; c < minor.cols(); ++c)
        if (!cols.contains(c))
            keep_cols.push_back(c);

    Gf2Matrix bits(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
        for (std::size_t j = 0; j < keep_cols.size(); ++j)
            if (minor.at(keep_rows[i], keep_cols[j]))
                bits.set(i, j);

    std::vector<std::string> row_labels, col_labels;
    if (!minor.row_labels().empty())
        for (std::size_t r : keep_rows)
            row_labels.push_back(minor.row_labels()[r]);
    if (!minor.col_labels().empty())
        for (std::size_t c : keep_cols)
            col_labels.push_back(minor.col_labels()[c]);
    return IncidenceMinor(minor.dim(), std::move(bits), std::move(row_labels), std::move(col_labels));
}

IncidenceMinor fixture_incidence(const FixtureSpec& spec) {
    switch (spec.family) {
        case Family::Simplex: return simplex_incidence(spec.d);
        case Family::CubeKM: return cube_km();
        case Family::Hypercube: return hypercube_incidence(spec.d);
        case Family::CrossPolytope: return cross_polytope_incidence(spec.d);
        case Family::Cyclic:
            require_dim(spec.d, 2, "cyclic fixture");
            if (spec.n > kMaxFixtureVertices)
                throw std::invalid_argument("cyclic fixture: at most " + std::to_string(kMaxFixtureVertices) +
                                            " vertices");
            return cyclic_incidence(spec.d, spec.n);
        case Family::Prism: {
            if (!spec.base)
                throw std::invalid_argument("prism fixture: missing base");
            IncidenceMinor base = fixture_incidence(*spec.base);
            if (base.dim() + 1 > kMaxFixtureDim)
                throw std::invalid_argument("prism fixture: dimension too large");
            return prism(base);
        }
    }
    throw std::invalid_argument("fixture_incidence: unknown family");
}

GeometricInstance geometric_fixture(const FixtureSpec& spec) {
    GeometricInstance inst;
    switch (spec.family) {
        case Family::Simplex: {
            require_dim(spec.d, 1, "simplex fixture");
            const auto d = static_cast<std::size_t>(spec.d);
            inst.dim = spec.d;
            inst.points.push_back({std::vector<Rational>(d, 0)});
            for (std::size_t k = 0; k < d; ++k)
                inst.points.push_back({unit(d, k)});
            inst.halfspaces.push_back({std::vector<Rational>(d, 1), 1});
            for (std::size_t k = 0; k < d; ++k)
                inst.halfspaces.push_back({unit(d, k, -1), 0});
            return inst;
        }
        case Family::CubeKM: {
            // Bottom square 1-2-3-4 at z = 0, vertical edges 1-8, 2-7, 3-6, 4-5.
            inst.dim = 3;
            const int coords[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                      {0, 1, 1}, {1, 1, 1}, {1, 0, 1}, {0, 0, 1}};
            for (const auto& c : coords)
                inst.points.push_back({{c[0], c[1], c[2]}});
            // Same order as the rows of cube_km().
            inst.halfspaces = {
                {unit(3, 2, -1), 0}, {unit(3, 1, -1), 0}, {unit(3, 0, -1), 0},
                {unit(3, 0), 1},     {unit(3, 1), 1},     {unit(3, 2), 1},
            };
            return inst;
        }
        case Family::Hypercube: {
            require_dim(spec.d, 1, "hypercube fixture");
            const auto d = static_cast<std::size_t>(spec.d);
            inst.dim = spec.d;
            for (std::size_t k = 0; k < (std::size_t{1} << d); ++k) {
                RationalPoint p;
                for (std::size_t j = 0; j < d; ++j)
                    p.coords.emplace_back(static_cast<int>((k >> j) & 1U));
                inst.points.push_back(std::move(p));
            }
            for (std::size_t j = 0; j < d; ++j) {
                inst.halfspaces.push_back({unit(d, j, -1), 0});
                inst.halfspaces.push_back({unit(d, j), 1});
            }
            return inst;
        }
        case Family::CrossPolytope: {
            require_dim(spec.d, 1, "cross-polytope fixture");
            const auto d = static_cast<std::size_t>(spec.d);
            inst.dim = spec.d;
            for (std::size_t j = 0; j < d; ++j) {
                inst.points.push_back({unit(d, j)});
                inst.points.push_back({unit(d, j, -1)});
            }
            for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
                Halfspace h;
                for (std::size_t j = 0; j < d; ++j)
                    h.normal.emplace_back(((mask >> j) & 1U) ? -1 : 1);
                h.offset = 1;
                inst.halfspaces.push_back(std::move(h));
            }
            return inst;
        }
        case Family::Cyclic: {
            const IncidenceMinor comb = fixture_incidence(spec);
            const auto d = static_cast<std::size_t>(spec.d);
            inst.dim = spec.d;
            for (int t = 1; t <= spec.n; ++t) {
                RationalPoint p;
                cpp_int power = 1;
                for (std::size_t k = 0; k < d; ++k) {
                    power *= t;
                    p.coords.emplace_back(power);
                }
                inst.points.push_back(std::move(p));
            }
            for (std::size_t r = 0; r < comb.rows(); ++r) {
                auto support = comb.row_support(r);
                const auto& base = inst.points[support[0] - 1].coords;
                std::vector<std::vector<Rational>> diffs;
                for (std::size_t s = 1; s < support.size(); ++s) {
                    std::vector<Rational> row(d);
                    for (std::size_t k = 0; k < d; ++k)
                        row[k] = inst.points[support[s] - 1].coords[k] - base[k];
                    diffs.push_back(std::move(row));
                }
                Halfspace h{null_vector(std::move(diffs), d), 0};
                for (std::size_t k = 0; k < d; ++k)
                    h.offset += h.normal[k] * base[k];
                // Orient so that every other point satisfies the inequality.
                for (std::size_t i = 0; i < inst.points.size(); ++i) {
                    Rational value = 0;
                    for (std::size_t k = 0; k < d; ++k)
                        value += h.normal[k] * inst.points[i].coords[k];
                    if (value != h.offset) {
                        if (value > h.offset) {
                            for (auto& a : h.normal)
                                a = -a;
                            h.offset = -h.offset;
                        }
                        break;
                    }
                }
                make_primitive(h);
                inst.halfspaces.push_back(std::move(h));
            }
            return inst;
        }
        case Family::Prism:
            break;
    }
    throw std::invalid_argument("geometric_fixture: no coordinates for " + spec.name());
}

}  // namespace polycomplete
