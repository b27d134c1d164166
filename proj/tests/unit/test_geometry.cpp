#include <doctest.h>

#include <sstream>

#include "polycomplete/fixtures.hpp"
#include "polycomplete/geometry.hpp"

using namespace polycomplete;

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t i = lo; i < hi; ++i)
        out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(format_rational(Rational(-4, 6)) == "-2/3");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS((void)parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("2/"), std::invalid_argument);
}

TEST_CASE("exact rank and affine dimension") {
    CHECK(rational_rank({}) == 0);
    CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rational_rank({{Rational(1, 3), 1}, {1, 3}, {0, 1}}) == 2);
    RationalPoint a{{0, 0, 0}};
    RationalPoint b{{1, 1, 1}};
    RationalPoint c{{2, 2, 2}};
    RationalPoint e{{0, 1, 0}};
    CHECK(affine_dimension({}) == -1);
    CHECK(affine_dimension({&a}) == 0);
    CHECK(affine_dimension({&a, &b, &c}) == 1);
    CHECK(affine_dimension({&a, &b, &e}) == 2);
}

TEST_CASE("geometric fixtures validate and extract their incidence matrices") {
    const std::vector<FixtureSpec> specs{
        FixtureSpec::simplex(2),       FixtureSpec::simplex(4),       FixtureSpec::cube_km(),
        FixtureSpec::hypercube(2),     FixtureSpec::hypercube(4),     FixtureSpec::cross_polytope(2),
        FixtureSpec::cross_polytope(3), FixtureSpec::cyclic(2, 5),    FixtureSpec::cyclic(3, 7),
        FixtureSpec::cyclic(4, 8),
    };
    for (const auto& spec : specs) {
        INFO(spec.name());
        const auto inst = geometric_fixture(spec);
        CHECK(validate_instance(inst).ok());
        CHECK(extract_incidence(inst) == fixture_incidence(spec));
    }
    CHECK_THROWS_AS((void)geometric_fixture(FixtureSpec::prism(FixtureSpec::simplex(2))), std::invalid_argument);
}

TEST_CASE("cube round-trip is permutation-equivalent to the Klee-Minty matrix") {
    const auto extracted = extract_incidence(geometric_fixture(FixtureSpec::cube_km()));
    CHECK(permutation_equivalent(extracted, cube_km()));
    CHECK(permutation_equivalent(extract_incidence(geometric_fixture(FixtureSpec::hypercube(3))), cube_km()));
}

TEST_CASE("dropping a cube facet breaks the vertex check for its four vertices") {
    const auto cube = geometric_fixture(FixtureSpec::cube_km());
    for (std::size_t h = 0; h < cube.halfspaces.size(); ++h) {
        auto inst = cube;
        inst.halfspaces.erase(inst.halfspaces.begin() + static_cast<std::ptrdiff_t>(h));
        const auto report = validate_instance(inst);
        INFO("without halfspace " << h);
        CHECK(report.containment.passed);
        CHECK(report.full_dimension.passed);
        CHECK(report.facets.passed);
        CHECK_FALSE(report.vertices.passed);
        const auto row = cube_km().row_support(h);
        std::vector<std::size_t> expected;
        for (Vertex v : row)
            expected.push_back(v - 1);
        CHECK(report.vertices.bad_points == expected);
    }
}

TEST_CASE("scaling a halfspace changes nothing") {
    auto inst = geometric_fixture(FixtureSpec::cube_km());
    for (auto& a : inst.halfspaces[3].normal)
        a *= Rational(7, 2);
    inst.halfspaces[3].offset *= Rational(7, 2);
    CHECK(validate_instance(inst).ok());
    CHECK(extract_incidence(inst) == cube_km());
}

TEST_CASE("translated halfspaces") {
    const auto cube = geometric_fixture(FixtureSpec::cube_km());

    auto outward = cube;
    outward.halfspaces[5].offset += 1;  // z <= 2
    const auto loose = validate_instance(outward);
    CHECK(loose.containment.passed);
    CHECK_FALSE(loose.facets.passed);
    CHECK(loose.facets.bad_halfspaces == std::vector<std::size_t>{5});
    CHECK(loose.vertices.bad_points == range(4, 8));

    auto inward = cube;
    inward.halfspaces[5].offset = Rational(1, 2);  // z <= 1/2 cuts off the top
    const auto cut = validate_instance(inward);
    CHECK_FALSE(cut.containment.passed);
    CHECK(cut.containment.bad_points == range(4, 8));
    CHECK_FALSE(cut.ok());
}

TEST_CASE("degenerate inputs are reported") {
    GeometricInstance flat{2, {{{0, 0}}, {{1, 0}}, {{2, 0}}}, {{{0, -1}, 0}, {{0, 1}, 0}}};
    const auto report = validate_instance(flat);
    CHECK_FALSE(report.full_dimension.passed);

    GeometricInstance twice{1, {{{0}}, {{0}}, {{1}}}, {{{-1}, 0}, {{1}, 1}}};
    const auto dup = validate_instance(twice);
    CHECK_FALSE(dup.distinct.passed);
    CHECK(dup.distinct.bad_points == std::vector<std::size_t>{1});

    GeometricInstance interior{1, {{{0}}, {{1}}, {{2}}}, {{{-1}, 0}, {{1}, 2}}};
    const auto mid = validate_instance(interior);
    CHECK_FALSE(mid.vertices.passed);
    CHECK(mid.vertices.bad_points == std::vector<std::size_t>{1});

    GeometricInstance wrong_shape{2, {{{0}}}, {}};
    CHECK_THROWS_AS((void)validate_instance(wrong_shape), std::invalid_argument);
    GeometricInstance zero_normal{1, {{{0}}}, {{{0}, 1}}};
    CHECK_THROWS_AS((void)validate_instance(zero_normal), std::invalid_argument);
}

TEST_CASE("geometry text round-trips") {
    const auto inst = geometric_fixture(FixtureSpec::cyclic(3, 6));
    std::ostringstream os;
    write_geometry(os, inst);
    const auto back = parse_geometry(os.str());
    CHECK(back.dim == inst.dim);
    CHECK(back.points == inst.points);
    CHECK(back.halfspaces == inst.halfspaces);

    const auto parsed = parse_geometry("# unit interval\n1 2 2\n0\n1/1\n-1 0\n2/2 1  # x <= 1\n");
    CHECK(parsed.points.size() == 2);
    CHECK(parsed.halfspaces[1].offset == 1);
    CHECK_THROWS_AS((void)parse_geometry("1 2 2\n0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_geometry("1 1 0\n1/0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_geometry("1 1 0\n1 2\n"), ParseError);
}

TEST_CASE("simplex and cross-polytope coordinates") {
    const auto simplex = geometric_fixture(FixtureSpec::simplex(3));
    CHECK(simplex.points.size() == 4);
    CHECK(simplex.halfspaces.size() == 4);
    const auto j = extract_incidence(simplex);
    for (std::size_t r = 0; r < j.rows(); ++r) {
        CHECK(j.row_support(r).size() == 3);
        CHECK_FALSE(j.at(r, r));
    }
    const auto octahedron = geometric_fixture(FixtureSpec::cross_polytope(3));
    CHECK(octahedron.points.size() == 6);
    CHECK(octahedron.halfspaces.size() == 8);
}

TEST_CASE("an interior point gives a zero column") {
    auto inst = geometric_fixture(FixtureSpec::cube_km());
    inst.points.push_back({{Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
    const auto j = extract_incidence(inst);
    CHECK(j.cols() == 9);
    for (std::size_t r = 0; r < j.rows(); ++r)
        CHECK_FALSE(j.at(r, 8));
    const auto report = validate_instance(inst);
    CHECK(report.vertices.bad_points == std::vector<std::size_t>{8});
}

TEST_CASE("uniform scaling of points and offsets preserves the matrix") {
    for (const auto& spec : {FixtureSpec::cube_km(), FixtureSpec::cyclic(3, 7), FixtureSpec::cross_polytope(3)}) {
        auto inst = geometric_fixture(spec);
        const Rational lambda(5, 3);
        for (auto& p : inst.points)
            for (auto& x : p.coords)
                x *= lambda;
        for (auto& h : inst.halfspaces)
            h.offset *= lambda;
        CHECK(validate_instance(inst).ok());
        CHECK(extract_incidence(inst) == fixture_incidence(spec));
    }
}
