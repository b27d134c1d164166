#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polycomplete/crosscut.hpp"
#include "polycomplete/fixtures.hpp"
#include "polycomplete/geometry.hpp"
#include "polycomplete/incidence.hpp"
#include "polycomplete/pulling.hpp"

namespace polycomplete::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string cert_path;
    std::string output;
    std::string side = "auto";
    std::vector<std::string> gen_spec;
    std::optional<int> dim;
    bool machine = false;
    bool force = false;
    bool geometry = false;
    int verbosity = 0;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

IncidenceMinor load_minor(const Options& opt, std::istream& in) {
    const std::string text = slurp(opt.input, in);
    try {
        IncidenceMinor minor = parse_incidence(text);
        return opt.dim ? minor.with_dim(*opt.dim) : minor;
    } catch (const ParseError& e) {
        throw InputError(opt.input + ": " + e.what());
    }
}

SidePolicy side_policy(const std::string& side) {
    if (side == "primal")
        return SidePolicy::Primal;
    if (side == "dual")
        return SidePolicy::Dual;
    return SidePolicy::Auto;
}

int cmd_check(const Options& opt, std::istream& in, std::ostream& out) {
    const IncidenceMinor minor = load_minor(opt, in);
    const int d = minor.dim();
    const HomologyReport rep = decide_report(d, minor, side_policy(opt.side));
    if (opt.machine) {
        out << "answer " << (rep.complete ? "yes" : "no") << '\n';
        out << "dim " << d << '\n';
        out << "side " << to_string(rep.side) << '\n';
        out << "stats " << rep.stats.s << ' ' << rep.stats.s_col << ' ' << rep.stats.s_prime << '\n';
        out << "top_boundary " << rep.top.rows << ' ' << rep.top.cols << ' ' << rep.top_rank << '\n';
        out << "bottom_boundary " << rep.bottom.rows << ' ' << rep.bottom.cols << ' ' << rep.bottom_nullity << '\n';
        out << "convention " << (rep.by_convention ? 1 : 0) << '\n';
    } else {
        out << (rep.complete ? "yes" : "no") << '\n';
        out << "side: " << to_string(rep.side) << " (s = " << size_stats(minor).s
            << ", s_col = " << size_stats(minor).s_col << ")\n";
        if (rep.by_convention) {
            out << "decided without homology (" << (d == 0 ? "d = 0 convention" : "no facet rows") << ")\n";
        } else {
            out << "boundary " << d << " -> " << d - 1 << ": " << rep.top.rows << " x " << rep.top.cols
                << ", rank " << rep.top_rank << '\n';
            out << "boundary " << d - 1 << " -> " << d - 2 << ": " << rep.bottom.rows << " x " << rep.bottom.cols
                << ", kernel dimension " << rep.bottom_nullity << '\n';
            if (opt.verbosity > 0)
                out << "reduced Betti number in degree " << d - 1 << ": " << rep.bottom_nullity - rep.top_rank << '\n';
        }
    }
    return rep.complete ? kYes : kNo;
}

int cmd_certify(const Options& opt, std::istream& in, std::ostream& out) {
    const IncidenceMinor minor = load_minor(opt, in);
    if (minor.dim() < 1)
        throw InputError("certificates need d >= 1");
    auto cert = find_certificate(minor.dim(), minor);
    if (!cert) {
        out << "COMPLETE\n";
        return kYes;
    }
    write_certificate(out, *cert);
    return kNo;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
    const IncidenceMinor minor = load_minor(opt, in);
    if (minor.dim() < 1)
        throw InputError("certificates need d >= 1");
    PullingCertificate cert;
    try {
        cert = parse_certificate(slurp(opt.cert_path, in));
    } catch (const ParseError& e) {
        throw InputError(opt.cert_path + ": " + e.what());
    }
    bool accepted = false;
    try {
        accepted = verify_certificate(minor.dim(), minor, cert);
    } catch (const std::invalid_argument& e) {
        throw InputError(opt.cert_path + ": malformed certificate: " + e.what());
    }
    out << (accepted ? "accept" : "reject") << '\n';
    return accepted ? kYes : kNo;
}

void print_report(const ValidationReport& report, bool machine, std::ostream& err) {
    for (const CheckOutcome* check : report.checks()) {
        if (machine) {
            err << "check \"" << check->name << "\" " << (check->passed ? "pass" : "fail") << '\n';
        } else {
            err << (check->passed ? "PASS " : "FAIL ") << check->name << '\n';
            for (const auto& msg : check->messages)
                err << "     " << msg << '\n';
        }
    }
}

int cmd_extract(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    GeometricInstance inst;
    try {
        inst = parse_geometry(slurp(opt.input, in));
    } catch (const ParseError& e) {
        throw InputError(opt.input + ": " + e.what());
    }
    ValidationReport report;
    try {
        report = validate_instance(inst);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    print_report(report, opt.machine, err);
    if (!report.ok() && !opt.force) {
        err << "error: instance failed validation; rerun with --force to extract anyway\n";
        return kInputError;
    }
    const IncidenceMinor minor = extract_incidence(inst);
    if (opt.output.empty()) {
        write_incidence(out, minor);
    } else {
        std::ofstream file(opt.output);
        if (!file)
            throw InputError("cannot write " + opt.output);
        write_incidence(file, minor);
    }
    return kYes;
}

int to_int(const std::string& token) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw InputError("expected an integer, got \"" + token + "\"");
    return value;
}

FixtureSpec parse_spec(const std::vector<std::string>& words, std::size_t& pos) {
    auto take = [&]() -> const std::string& {
        if (pos >= words.size())
            throw InputError("incomplete fixture description");
        return words[pos++];
    };
    const std::string family = take();
    if (family == "simplex")
        return FixtureSpec::simplex(to_int(take()));
    if (family == "cube-km")
        return FixtureSpec::cube_km();
    if (family == "hypercube" || family == "cube")
        return FixtureSpec::hypercube(to_int(take()));
    if (family == "cross" || family == "cross-polytope")
        return FixtureSpec::cross_polytope(to_int(take()));
    if (family == "cyclic") {
        int d = to_int(take());
        int n = to_int(take());
        return FixtureSpec::cyclic(d, n);
    }
    if (family == "prism")
        return FixtureSpec::prism(parse_spec(words, pos));
    throw InputError("unknown fixture family \"" + family + "\"");
}

int cmd_gen(const Options& opt, std::ostream& out) {
    std::size_t pos = 0;
    const FixtureSpec spec = parse_spec(opt.gen_spec, pos);
    if (pos != opt.gen_spec.size())
        throw InputError("unexpected argument \"" + opt.gen_spec[pos] + "\"");

    std::ostringstream text;
    try {
        if (opt.geometry)
            write_geometry(text, geometric_fixture(spec));
        else
            write_incidence(text, fixture_incidence(spec));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (opt.output.empty()) {
        out << text.str();
    } else {
        std::ofstream file(opt.output);
        if (!file)
            throw InputError("cannot write " + opt.output);
        file << text.str();
    }
    return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide completeness of vertex-facet incidence minors and certify incompleteness", "polycomplete"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--machine", opt.machine, "Stable key/value output");
        sub->add_flag("-v,--verbose", opt.verbosity, "More detail");
    };

    auto* check = app.add_subcommand("check", "Decide completeness by homology");
    check->add_option("file", opt.input, "Incidence file, or - for stdin")->required();
    check->add_option("--side", opt.side, "Matrix to run homology on")
        ->check(CLI::IsMember({"auto", "primal", "dual"}));
    check->add_option("-d,--dim", opt.dim, "Override the dimension in the file")->check(CLI::NonNegativeNumber);
    add_common(check);

    auto* certify = app.add_subcommand("certify", "Print an incompleteness certificate, or COMPLETE");
    certify->add_option("file", opt.input, "Incidence file, or - for stdin")->required();
    certify->add_option("-d,--dim", opt.dim, "Override the dimension in the file")->check(CLI::NonNegativeNumber);
    add_common(certify);

    auto* verify = app.add_subcommand("verify", "Check a certificate against an incidence file");
    verify->add_option("file", opt.input, "Incidence file")->required();
    verify->add_option("certificate", opt.cert_path, "Certificate file")->required();
    verify->add_option("-d,--dim", opt.dim, "Override the dimension in the file")->check(CLI::NonNegativeNumber);
    add_common(verify);

    auto* extract = app.add_subcommand("extract", "Validate a geometric instance and print its incidence matrix");
    extract->add_option("file", opt.input, "Geometry file, or - for stdin")->required();
    extract->add_flag("--force", opt.force, "Extract even if validation fails");
    extract->add_option("-o,--output", opt.output, "Write the incidence matrix here");
    add_common(extract);

    auto* gen = app.add_subcommand("gen", "Emit a fixture: simplex D | cube-km | hypercube D | cross D | cyclic D N | prism <fixture>");
    gen->add_option("fixture", opt.gen_spec, "Fixture description")->required();
    gen->add_flag("--geometry", opt.geometry, "Emit coordinates and halfspaces instead of the incidence matrix");
    gen->add_option("-o,--output", opt.output, "Write here instead of stdout");
    add_common(gen);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (check->parsed())
            return cmd_check(opt, in, out);
        if (certify->parsed())
            return cmd_certify(opt, in, out);
        if (verify->parsed())
            return cmd_verify(opt, in, out);
        if (extract->parsed())
            return cmd_extract(opt, in, out, err);
        if (gen->parsed())
            return cmd_gen(opt, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace polycomplete::cli
