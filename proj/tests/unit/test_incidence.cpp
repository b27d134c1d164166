#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "polycomplete/fixtures.hpp"
#include "polycomplete/incidence.hpp"
#include "polycomplete/simplex.hpp"

using namespace polycomplete;

TEST_CASE("simplex labels") {
    Simplex s{2, 5, 9};
    CHECK(s.size() == 3);
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(4));
    CHECK(s.without(1) == Simplex{2, 9});
    CHECK(s.with(3) == Simplex{2, 3, 5, 9});
    CHECK(s.to_string() == "2 5 9");
    CHECK(Simplex::from_unsorted({9, 2, 5}) == s);
    CHECK(Simplex{1, 2} < Simplex{1, 3});
    CHECK_THROWS_AS(Simplex({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex::from_unsorted({4, 4}), std::invalid_argument);
    CHECK_THROWS_AS((void)s.with(5), std::invalid_argument);
    CHECK(SimplexHash{}(s) == SimplexHash{}(Simplex{2, 5, 9}));
}

TEST_CASE("constructing minors") {
    auto j = IncidenceMinor::from_supports(2, 4, {{1, 2}, {2, 3}});
    CHECK(j.dim() == 2);
    CHECK(j.rows() == 2);
    CHECK(j.cols() == 4);
    CHECK(j.at(1, 2));
    CHECK(j.row_support(1) == std::vector<Vertex>{2, 3});
    CHECK(j.row_label(0) == "1");
    CHECK(j.col_label(3) == "4");
    CHECK(j.with_dim(5).dim() == 5);
    CHECK_THROWS_AS(IncidenceMinor(-1, Gf2Matrix(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(IncidenceMinor(1, Gf2Matrix(1, 1), {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(IncidenceMinor::from_supports(1, 2, {{3}}), std::invalid_argument);
}

TEST_CASE("parse the cube example") {
    const char* text =
        "# 3-cube, Klee-Minty numbering\n"
        "3 6 8\n"
        "11110000\n"
        "11000011   # trailing comment\n"
        "\n"
        "10011001\n"
        "01100110\n"
        "00111100\n"
        "00001111\n";
    auto j = parse_incidence(text);
    CHECK(j == cube_km());
}

TEST_CASE("parse errors carry positions") {
    auto fails_at = [](std::string_view text, std::size_t line, std::size_t column) {
        try {
            (void)parse_incidence(text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("no ParseError for: " << text);
    };
    fails_at("", 1, 1);
    fails_at("3 2\n", 1, 1);
    fails_at("3 2 3\n110\n1a1\n", 3, 2);
    fails_at("3 2 3\n110\n1011\n", 3, 4);
    fails_at("3 2 3\n110\n10\n", 3, 3);
    fails_at("3 1 3\n110\n011\n", 3, 1);
    fails_at("3 2 3\n110\n", 3, 1);
    fails_at("x 2 3\n", 1, 1);
}

TEST_CASE("empty rows when n is zero") {
    auto j = parse_incidence("1 2 0\n\n\n");
    CHECK(j.rows() == 2);
    CHECK(j.cols() == 0);
    auto k = parse_incidence("0 0 0\n");
    CHECK(k.rows() == 0);
}

TEST_CASE("write then parse round-trips") {
    std::mt19937 rng(3);
    std::bernoulli_distribution bit(0.4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = rng() % 12;
        const std::size_t n = 1 + rng() % 80;
        Gf2Matrix bits(m, n);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c)
                bits.set(r, c, bit(rng));
        IncidenceMinor j(static_cast<int>(rng() % 6), bits);
        const std::string text = to_text(j);
        CHECK(text.find('\r') == std::string::npos);
        CHECK(parse_incidence(text) == j);
        std::ostringstream os;
        write_incidence(os, j);
        CHECK(os.str() == text);
    }
}

TEST_CASE("transpose") {
    const auto j = cube_km();
    const auto t = transpose(j);
    CHECK(t.rows() == 8);
    CHECK(t.cols() == 6);
    CHECK(t.dim() == 3);
    CHECK(transpose(t) == j);
    for (std::size_t r = 0; r < j.rows(); ++r)
        for (std::size_t c = 0; c < j.cols(); ++c)
            CHECK(t.at(c, r) == j.at(r, c));

    IncidenceMinor labelled(1, Gf2Matrix::from_strings({"10", "01"}), {"F", "G"}, {"a", "b"});
    const auto lt = transpose(labelled);
    CHECK(lt.row_label(0) == "a");
    CHECK(lt.col_label(1) == "G");
}

TEST_CASE("size statistics") {
    const auto s = size_stats(cube_km());
    CHECK(s.s == 4);
    CHECK(s.s_col == 3);
    CHECK(s.s_prime == 3);
    const auto e = size_stats(IncidenceMinor());
    CHECK(e.s == 0);
    CHECK(e.s_col == 0);
}

TEST_CASE("permutation equivalence") {
    const auto j = cube_km();
    // Relabel columns by a fixed permutation and reverse the rows.
    const std::vector<Vertex> perm{5, 3, 8, 1, 7, 2, 6, 4};
    std::vector<std::vector<Vertex>> rows;
    for (std::size_t r = j.rows(); r-- > 0;) {
        std::vector<Vertex> row;
        for (Vertex v : j.row_support(r))
            row.push_back(perm[v - 1]);
        std::sort(row.begin(), row.end());
        rows.push_back(row);
    }
    const auto k = IncidenceMinor::from_supports(3, 8, rows);
    CHECK(permutation_equivalent(j, k));
    CHECK(permutation_equivalent(hypercube_incidence(3), j));
    CHECK_FALSE(permutation_equivalent(j, delete_minor(j, {0}, {})));
    CHECK_FALSE(permutation_equivalent(j, cross_polytope_incidence(3)));
    CHECK(permutation_equivalent(transpose(j), cross_polytope_incidence(3)));
    // Same row and column degrees, different structure: a hexagon vs two triangles.
    const auto hexagon = IncidenceMinor::from_supports(2, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    const auto triangles = IncidenceMinor::from_supports(2, 6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK_FALSE(permutation_equivalent(hexagon, triangles));
}

TEST_CASE("small parse cases") {
    const auto lone = parse_incidence("0 0 1\n");
    CHECK(lone.dim() == 0);
    CHECK(lone.rows() == 0);
    CHECK(lone.cols() == 1);
    const auto triangle = parse_incidence("2 3 3\n110\n011\n101\n");
    CHECK(triangle.rows() == 3);
    CHECK(permutation_equivalent(triangle, simplex_incidence(2)));
}

TEST_CASE("transpose and size statistics of small cases") {
    const IncidenceMinor empty;
    CHECK(transpose(empty).rows() == 0);
    CHECK(transpose(empty).cols() == 0);
    const auto triangle = IncidenceMinor::from_strings(2, {"110", "011", "101"});
    CHECK(permutation_equivalent(transpose(triangle), triangle));
    const auto s = size_stats(triangle);
    CHECK(s.s == 2);
    CHECK(s.s_col == 2);
    CHECK(s.s_prime == 2);
    const auto z = size_stats(IncidenceMinor::from_strings(1, {"00", "00"}));
    CHECK(z.s == 0);
    CHECK(z.s_col == 0);
    CHECK(z.s_prime == 0);
}
