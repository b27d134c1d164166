#include "corpus.hpp"

#include <sstream>

namespace polycomplete::testing {

namespace {

std::string describe(const std::string& base, const std::set<std::size_t>& rows, const std::set<std::size_t>& cols) {
    std::ostringstream os;
    os << base;
    if (!rows.empty()) {
        os << " -rows";
        for (auto r : rows)
            os << ' ' << r + 1;
    }
    if (!cols.empty()) {
        os << " -cols";
        for (auto c : cols)
            os << ' ' << c + 1;
    }
    return os.str();
}

}  // namespace

std::vector<FixtureSpec> corpus_fixtures() {
    return {
        FixtureSpec::simplex(2),
        FixtureSpec::simplex(3),
        FixtureSpec::simplex(4),
        FixtureSpec::cube_km(),
        FixtureSpec::hypercube(2),
        FixtureSpec::cross_polytope(2),
        FixtureSpec::cross_polytope(3),
        FixtureSpec::cross_polytope(4),
        FixtureSpec::cyclic(3, 6),
        FixtureSpec::cyclic(3, 7),
        FixtureSpec::cyclic(4, 7),
        FixtureSpec::cyclic(4, 8),
        FixtureSpec::cyclic(5, 8),
        FixtureSpec::cyclic(4, 9),
        FixtureSpec::cyclic(3, 10),
        FixtureSpec::prism(FixtureSpec::simplex(2)),
        FixtureSpec::prism(FixtureSpec::simplex(3)),
        FixtureSpec::prism(FixtureSpec::cross_polytope(2)),
    };
}

std::vector<CorpusEntry> deletion_corpus() {
    std::vector<CorpusEntry> out;
    for (const auto& spec : corpus_fixtures()) {
        const IncidenceMinor full = fixture_incidence(spec);
        const std::string base = spec.name();
        auto add = [&](const std::set<std::size_t>& rows, const std::set<std::size_t>& cols) {
            out.push_back({describe(base, rows, cols), delete_minor(full, rows, cols)});
        };
        add({}, {});
        for (std::size_t r = 0; r < full.rows(); ++r)
            add({r}, {});
        for (std::size_t c = 0; c < full.cols(); ++c)
            add({}, {c});
        for (std::size_t r = 0; r < full.rows(); ++r)
            for (std::size_t c = 0; c < full.cols(); ++c)
                add({r}, {c});
        // Strided multi-row deletions, alone and with one column.
        for (std::size_t stride = 2; stride <= 3; ++stride)
            for (std::size_t offset = 0; offset < stride; ++offset) {
                std::set<std::size_t> rows;
                for (std::size_t r = offset; r < full.rows(); r += stride)
                    rows.insert(r);
                add(rows, {});
                add(rows, {offset});
            }
    }
    return out;
}

}  // namespace polycomplete::testing
