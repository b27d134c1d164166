#include "polycomplete/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace polycomplete {

namespace {

using boost::multiprecision::cpp_int;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

void require_shape(const GeometricInstance& inst) {
    if (inst.dim < 0)
        throw std::invalid_argument("geometry: dimension must be nonnegative");
    const auto d = static_cast<std::size_t>(inst.dim);
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        if (inst.points[i].coords.size() != d)
            throw std::invalid_argument("geometry: point " + std::to_string(i + 1) + " has " +
                                        std::to_string(inst.points[i].coords.size()) + " coordinates, expected " +
                                        std::to_string(d));
    for (std::size_t j = 0; j < inst.halfspaces.size(); ++j) {
        const auto& h = inst.halfspaces[j];
        if (h.normal.size() != d)
            throw std::invalid_argument("geometry: halfspace " + std::to_string(j + 1) + " has a normal of length " +
                                        std::to_string(h.normal.size()) + ", expected " + std::to_string(d));
        if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return x == 0; }))
            throw std::invalid_argument("geometry: halfspace " + std::to_string(j + 1) + " has a zero normal");
    }
}

bool tight(const Halfspace& h, const RationalPoint& p) {
    return dot(h.normal, p.coords) == h.offset;
}

void fail(CheckOutcome& check, std::string message) {
    check.passed = false;
    check.messages.push_back(std::move(message));
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

int affine_dimension(const std::vector<const RationalPoint*>& points) {
    if (points.empty())
        return -1;
    std::vector<std::vector<Rational>> diffs;
    diffs.reserve(points.size() - 1);
    const auto& base = points.front()->coords;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> row(base.size());
        for (std::size_t k = 0; k < base.size(); ++k)
            row[k] = points[i]->coords[k] - base[k];
        diffs.push_back(std::move(row));
    }
    return static_cast<int>(rational_rank(std::move(diffs)));
}

ValidationReport validate_instance(const GeometricInstance& inst) {
    require_shape(inst);
    const int d = inst.dim;
    const auto& pts = inst.points;
    const auto& hs = inst.halfspaces;

    ValidationReport report;
    report.distinct.name = "distinct points";
    report.containment.name = "(a) containment";
    report.full_dimension.name = "(b) full dimension";
    report.vertices.name = "(c) points are vertices of Q";
    report.facets.name = "(d) halfspaces are facets of P";

    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pts[i] == pts[j]) {
                report.distinct.bad_points.push_back(i);
                fail(report.distinct,
                     "point " + std::to_string(i + 1) + " repeats point " + std::to_string(j + 1));
                break;
            }

    // on_boundary[j][i]: point i lies on the boundary of halfspace j.
    std::vector<std::vector<bool>> on_boundary(hs.size(), std::vector<bool>(pts.size(), false));
    for (std::size_t j = 0; j < hs.size(); ++j) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Rational value = dot(hs[j].normal, pts[i].coords);
            if (value > hs[j].offset) {
                report.containment.bad_points.push_back(i);
                report.containment.bad_halfspaces.push_back(j);
                fail(report.containment,
                     "point " + std::to_string(i + 1) + " violates halfspace " + std::to_string(j + 1));
            }
            on_boundary[j][i] = value == hs[j].offset;
        }
    }

    {
        std::vector<const RationalPoint*> all;
        for (const auto& p : pts)
            all.push_back(&p);
        int dim = affine_dimension(all);
        if (dim != d)
            fail(report.full_dimension,
                 "points span affine dimension " + std::to_string(dim) + ", expected " + std::to_string(d));
        for (std::size_t j = 0; j < hs.size(); ++j) {
            bool all_tight = !pts.empty() &&
                             std::all_of(on_boundary[j].begin(), on_boundary[j].end(), [](bool b) { return b; });
            if (all_tight) {
                report.full_dimension.bad_halfspaces.push_back(j);
                fail(report.full_dimension,
                     "halfspace " + std::to_string(j + 1) + " is tight on every point (implicit equation)");
            }
        }
    }

    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::vector<Rational>> normals;
        for (std::size_t j = 0; j < hs.size(); ++j)
            if (on_boundary[j][i])
                normals.push_back(hs[j].normal);
        const std::size_t count = normals.size();
        const std::size_t r = rational_rank(std::move(normals));
        if (r != static_cast<std::size_t>(d)) {
            report.vertices.bad_points.push_back(i);
            fail(report.vertices, "point " + std::to_string(i + 1) + " lies on " + std::to_string(count) +
                                      " boundaries whose normals have rank " + std::to_string(r) + " < " +
                                      std::to_string(d));
        }
    }

    for (std::size_t j = 0; j < hs.size(); ++j) {
        std::vector<const RationalPoint*> on;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (on_boundary[j][i])
                on.push_back(&pts[i]);
        int dim = affine_dimension(on);
        if (dim != d - 1) {
            report.facets.bad_halfspaces.push_back(j);
            fail(report.facets, "halfspace " + std::to_string(j + 1) + " touches " + std::to_string(on.size()) +
                                    " points spanning affine dimension " + std::to_string(dim) + ", expected " +
                                    std::to_string(d - 1));
        }
    }

    return report;
}

IncidenceMinor extract_incidence(const GeometricInstance& inst) {
    require_shape(inst);
    Gf2Matrix bits(inst.halfspaces.size(), inst.points.size());
    for (std::size_t j = 0; j < inst.halfspaces.size(); ++j)
        for (std::size_t i = 0; i < inst.points.size(); ++i)
            if (tight(inst.halfspaces[j], inst.points[i]))
                bits.set(j, i);
    return IncidenceMinor(inst.dim, std::move(bits));
}

Rational parse_rational(std::string_view token) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return cpp_int(std::string(s));
    };

    auto slash = token.find('/');
    std::string_view num = token.substr(0, slash);
    if (!is_integer(num))
        throw std::invalid_argument("not a rational number: \"" + std::string(token) + "\"");
    if (slash == std::string_view::npos)
        return Rational(to_int(num));
    std::string_view den = token.substr(slash + 1);
    if (den.empty() || !std::all_of(den.begin(), den.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("not a rational number: \"" + std::string(token) + "\"");
    cpp_int denominator = to_int(den);
    if (denominator == 0)
        throw std::invalid_argument("zero denominator in \"" + std::string(token) + "\"");
    return Rational(to_int(num), denominator);
}

std::string format_rational(const Rational& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

GeometricInstance parse_geometry(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t d = 0, p = 0, h = 0;
    GeometricInstance inst;

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

        auto number = [&](std::size_t t) {
            try {
                return parse_rational(tokens[t].first);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, tokens[t].second, e.what());
            }
        };

        if (!have_header) {
            if (tokens.size() != 3)
                throw ParseError(line_no, 1, "header must be \"d p h\"");
            std::size_t values[3];
            for (std::size_t t = 0; t < 3; ++t) {
                Rational q = number(t);
                if (q < 0 || boost::multiprecision::denominator(q) != 1 || q > 1000000)
                    throw ParseError(line_no, tokens[t].second, "expected a nonnegative integer");
                values[t] = static_cast<std::size_t>(boost::multiprecision::numerator(q));
            }
            d = values[0];
            p = values[1];
            h = values[2];
            inst.dim = static_cast<int>(d);
            have_header = true;
            continue;
        }

        if (inst.points.size() < p) {
            if (tokens.size() != d)
                throw ParseError(line_no, 1,
                                 "point has " + std::to_string(tokens.size()) + " coordinates, expected " +
                                     std::to_string(d));
            RationalPoint pt;
            for (std::size_t t = 0; t < d; ++t)
                pt.coords.push_back(number(t));
            inst.points.push_back(std::move(pt));
        } else if (inst.halfspaces.size() < h) {
            if (tokens.size() != d + 1)
                throw ParseError(line_no, 1,
                                 "halfspace has " + std::to_string(tokens.size()) + " numbers, expected " +
                                     std::to_string(d + 1));
            Halfspace hs;
            for (std::size_t t = 0; t < d; ++t)
                hs.normal.push_back(number(t));
            hs.offset = number(d);
            if (std::all_of(hs.normal.begin(), hs.normal.end(), [](const Rational& x) { return x == 0; }))
                throw ParseError(line_no, 1, "halfspace normal is zero");
            inst.halfspaces.push_back(std::move(hs));
        } else {
            throw ParseError(line_no, 1, "unexpected content after the last halfspace");
        }
    }
    if (!have_header)
        throw ParseError(line_no + 1, 1, "missing header \"d p h\"");
    if (inst.points.size() != p || inst.halfspaces.size() != h)
        throw ParseError(line_no + 1, 1,
                         "expected " + std::to_string(p) + " points and " + std::to_string(h) + " halfspaces, found " +
                             std::to_string(inst.points.size()) + " and " + std::to_string(inst.halfspaces.size()));
    return inst;
}

GeometricInstance parse_geometry(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_geometry(in);
}

void write_geometry(std::ostream& out, const GeometricInstance& inst) {
    out << inst.dim << ' ' << inst.points.size() << ' ' << inst.halfspaces.size() << '\n';
    for (const auto& p : inst.points) {
        for (std::size_t k = 0; k < p.coords.size(); ++k)
            out << (k ? " " : "") << format_rational(p.coords[k]);
        out << '\n';
    }
    for (const auto& hs : inst.halfspaces) {
        for (const auto& a : hs.normal)
            out << format_rational(a) << ' ';
        out << format_rational(hs.offset) << '\n';
    }
}

}  // namespace polycomplete
