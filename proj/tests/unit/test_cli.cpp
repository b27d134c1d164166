#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "polycomplete/fixtures.hpp"
#include "polycomplete/geometry.hpp"

using namespace polycomplete;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "polycomplete");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("polycomplete-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path path_;
};

}  // namespace

TEST_CASE("check reads stdin and reports yes") {
    const auto r = invoke({"check", "-"}, to_text(cube_km()));
    CHECK(r.code == cli::kYes);
    CHECK(r.out.rfind("yes\n", 0) == 0);
    CHECK(r.out.find("side: dual") != std::string::npos);
}

TEST_CASE("check machine output") {
    const auto r = invoke({"check", "-", "--machine", "--side", "primal"}, to_text(cube_km()));
    CHECK(r.code == cli::kYes);
    CHECK(r.out ==
          "answer yes\n"
          "dim 3\n"
          "side primal\n"
          "stats 4 3 3\n"
          "top_boundary 24 6 6\n"
          "bottom_boundary 24 24 7\n"
          "convention 0\n");
}

TEST_CASE("dimension override") {
    const auto r = invoke({"check", "-", "--dim", "4", "--machine"}, to_text(cube_km()));
    CHECK(r.code == cli::kNo);
    CHECK(r.out.rfind("answer no\ndim 4\n", 0) == 0);
}

TEST_CASE("input errors exit with 2") {
    CHECK(invoke({"check", "-"}, "3 1 2\n101\n").code == cli::kInputError);
    CHECK(invoke({"check", "/nonexistent/file"}).code == cli::kInputError);
    CHECK(invoke({"check", "-", "--side", "sideways"}, to_text(cube_km())).code == cli::kInputError);
    CHECK(invoke({}).code == cli::kInputError);
    CHECK(invoke({"frobnicate"}).code == cli::kInputError);
    CHECK(invoke({"gen", "cyclic", "4"}).code == cli::kInputError);
    CHECK(invoke({"gen", "cyclic", "4", "x"}).code == cli::kInputError);
    CHECK(invoke({"gen", "dodecahedron"}).code == cli::kInputError);
    CHECK(invoke({"gen", "simplex", "3", "4"}).code == cli::kInputError);
    const auto parse = invoke({"check", "-"}, "3 1 2\n1x\n");
    CHECK(parse.err.find("line 2, column 2") != std::string::npos);
}

TEST_CASE("help exits with 0") {
    const auto r = invoke({"--help"});
    CHECK(r.code == cli::kYes);
    CHECK(r.out.find("certify") != std::string::npos);
}

TEST_CASE("gen emits fixtures") {
    const auto r = invoke({"gen", "cyclic", "4", "8"});
    CHECK(r.code == cli::kYes);
    CHECK(parse_incidence(r.out) == cyclic_incidence(4, 8));
    CHECK(parse_incidence(invoke({"gen", "prism", "simplex", "2"}).out) == prism(simplex_incidence(2)));
    const auto g = invoke({"gen", "--geometry", "cube-km"});
    CHECK(extract_incidence(parse_geometry(g.out)) == cube_km());
}

TEST_CASE("certify and verify") {
    TempDir dir;
    const auto minor = dir.write("minor.txt", to_text(delete_minor(cube_km(), {0}, {})));
    const auto r = invoke({"certify", minor});
    CHECK(r.code == cli::kNo);
    CHECK(r.out == "RIDGE 2 3\n");

    const auto good = dir.write("good.cert", r.out);
    const auto v = invoke({"verify", minor, good});
    CHECK(v.code == cli::kYes);
    CHECK(v.out == "accept\n");

    const auto bad = dir.write("bad.cert", "RIDGE 7 8\n");
    const auto w = invoke({"verify", minor, bad});
    CHECK(w.code == cli::kNo);
    CHECK(w.out == "reject\n");

    const auto short_ridge = dir.write("short.cert", "RIDGE 7\n");
    CHECK(invoke({"verify", minor, short_ridge}).code == cli::kInputError);
    const auto garbage = dir.write("garbage.cert", "FACET\n");
    CHECK(invoke({"verify", minor, garbage}).code == cli::kInputError);

    const auto full = invoke({"certify", "-"}, to_text(cube_km()));
    CHECK(full.code == cli::kYes);
    CHECK(full.out == "COMPLETE\n");

    const auto top = invoke({"certify", "-"}, to_text(delete_minor(cube_km(), {5}, {})));
    CHECK(top.out == "EMPTY\n");
}

TEST_CASE("extract validates before printing") {
    TempDir dir;
    std::ostringstream geo;
    write_geometry(geo, geometric_fixture(FixtureSpec::cube_km()));
    const auto ok = invoke({"extract", dir.write("cube.geo", geo.str())});
    CHECK(ok.code == cli::kYes);
    CHECK(parse_incidence(ok.out) == cube_km());
    CHECK(ok.err.find("FAIL") == std::string::npos);

    auto broken = geometric_fixture(FixtureSpec::cube_km());
    broken.halfspaces.pop_back();
    std::ostringstream bad;
    write_geometry(bad, broken);
    const auto path = dir.write("broken.geo", bad.str());
    const auto refused = invoke({"extract", path});
    CHECK(refused.code == cli::kInputError);
    CHECK(refused.out.empty());
    CHECK(refused.err.find("FAIL (c)") != std::string::npos);

    const auto forced = invoke({"extract", path, "--force"});
    CHECK(forced.code == cli::kYes);
    CHECK(parse_incidence(forced.out).rows() == 5);

    const auto machine = invoke({"extract", path, "--machine"});
    CHECK(machine.err.find("check \"(c) points are vertices of Q\" fail") != std::string::npos);
}

TEST_CASE("empty inputs are input errors") {
    CHECK(invoke({"check", "-"}, "").code == cli::kInputError);
    CHECK(invoke({"certify", "-"}, "").code == cli::kInputError);
    CHECK(invoke({"extract", "-"}, "").code == cli::kInputError);
}

TEST_CASE("certify in a higher dimension") {
    const auto r = invoke({"certify", "-", "--dim", "4"}, to_text(cube_km()));
    CHECK(r.code == cli::kNo);
    CHECK(r.out == "EMPTY\n");
}

TEST_CASE("check and certify agree on fixtures and their row deletions") {
    const std::vector<FixtureSpec> specs{FixtureSpec::cube_km(), FixtureSpec::cyclic(4, 8),
                                         FixtureSpec::cross_polytope(3), FixtureSpec::prism(FixtureSpec::simplex(2))};
    for (const auto& spec : specs) {
        const auto full = fixture_incidence(spec);
        std::vector<IncidenceMinor> minors{full};
        for (std::size_t r = 0; r < full.rows(); ++r)
            minors.push_back(delete_minor(full, {r}, {}));
        for (const auto& j : minors) {
            const auto text = to_text(j);
            CHECK(invoke({"check", "-"}, text).code == invoke({"certify", "-"}, text).code);
        }
    }
}
