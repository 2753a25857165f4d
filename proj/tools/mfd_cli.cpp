// Command-line front end: diagram analysis, code construction, verification,
// and bit-exact reproduction of the pinned reference scenarios.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mfd/golden.hpp"
#include "mfd/json_io.hpp"

namespace {

using namespace mfd;

std::pair<std::uint64_t, int> parse_field_spec(const std::string& text) {
    const auto caret = text.find('^');
    try {
        if (caret == std::string::npos) return {std::stoull(text), 1};
        return {std::stoull(text.substr(0, caret)), std::stoi(text.substr(caret + 1))};
    } catch (const std::exception&) {
        fail(Errc::ParseError, "field must be given as p or p^e, got '" + text + "'");
    }
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail(Errc::ParseError, std::string(what) + ": invalid entry '" + tok + "'");
        }
    }
    if (out.empty()) fail(Errc::ParseError, std::string(what) + ": empty list");
    return out;
}

std::uint64_t default_cap_from_env() {
    if (const char* env = std::getenv("MFD_FORGE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail(Errc::ParseError, "MFD_FORGE_CAP is not a number");
        }
    }
    return kDefaultEnumerationCap;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path);
    if (!os) fail(Errc::InvalidArgument, "cannot open output file '" + path + "'");
    os << content;
}

std::string render_profile_text(const DiagramProfile& prof) {
    std::ostringstream os;
    os << "diagram:  " << prof.diagram.to_string() << "  (order " << prof.diagram.order() << ", "
       << prof.diagram.cell_count() << " cells)\n";
    os << "adjoint:  " << prof.adj.to_string() << "\n";
    os << "classes:  monotone=" << (prof.monotone ? "yes" : "no")
       << " strictly-monotone=" << (prof.strictly_monotone ? "yes" : "no")
       << " convex=" << (prof.convex ? "yes" : "no")
       << " initially-convex=" << (prof.initially_convex ? "yes" : "no") << "\n";
    for (const PrimeRecord& pr : prof.primes) {
        os << "p=" << pr.p << ":  height=" << pr.height << " contraction=" << pr.contraction.to_string()
           << " p-monotone=" << (pr.p_monotone ? "yes" : "no") << " p-convex=" << (pr.p_convex ? "yes" : "no")
           << " strictly-p-monotone=" << (pr.strictly_p_monotone ? "yes" : "no")
           << " initially-p-convex=" << (pr.initially_p_convex ? "yes" : "no") << "\n";
    }
    os << "d  nu_j (j=0..d-1)        nu_min  nu_mds  mds-constructible  singleton-j\n";
    for (const DistanceRecord& rec : prof.distances) {
        std::ostringstream nus;
        for (std::size_t i = 0; i < rec.nu.size(); ++i) {
            if (i) nus << ',';
            nus << rec.nu[i];
        }
        std::ostringstream sing;
        for (std::size_t i = 0; i < rec.singleton.size(); ++i) {
            if (i) sing << ',';
            sing << rec.singleton[i];
        }
        os << rec.d << "  " << nus.str();
        for (std::size_t pad = nus.str().size(); pad < 22; ++pad) os << ' ';
        os << rec.nu_min << "       " << rec.nu_mds << "      " << (rec.mds_constructible ? "yes" : "no ")
           << "                " << (rec.d >= 2 ? sing.str() : "-") << "\n";
    }
    return os.str();
}

json profile_to_json(const DiagramProfile& prof) {
    json j;
    j["diagram"] = diagram_to_json(prof.diagram);
    j["cells"] = prof.diagram.cell_count();
    j["adjoint"] = diagram_to_json(prof.adj);
    j["monotone"] = prof.monotone;
    j["strictly_monotone"] = prof.strictly_monotone;
    j["convex"] = prof.convex;
    j["initially_convex"] = prof.initially_convex;
    j["primes"] = json::array();
    for (const PrimeRecord& pr : prof.primes)
        j["primes"].push_back(json{{"p", pr.p},
                                   {"height", pr.height},
                                   {"contraction", diagram_to_json(pr.contraction)},
                                   {"p_monotone", pr.p_monotone},
                                   {"p_convex", pr.p_convex},
                                   {"strictly_p_monotone", pr.strictly_p_monotone},
                                   {"initially_p_convex", pr.initially_p_convex}});
    j["distances"] = json::array();
    for (const DistanceRecord& rec : prof.distances)
        j["distances"].push_back(json{{"d", rec.d},
                                      {"nu", rec.nu},
                                      {"nu_min", rec.nu_min},
                                      {"nu_mds", rec.nu_mds},
                                      {"mds_constructible", rec.mds_constructible},
                                      {"singleton", rec.singleton}});
    return j;
}

std::string render_code_text(const FerrersCode& code) {
    std::ostringstream os;
    os << "field:      GF(" << code.field->q() << ")  (p=" << code.p << ", e=" << code.e << ")\n";
    os << "diagram:    " << code.diagram.to_string() << "  (order " << code.n << ")\n";
    os << "distance:   " << code.d << "\n";
    os << "dimension:  " << code.dimension() << "\n";
    os << "path:       " << code.trace.path << "\n";
    if (!code.trace.modulus.empty()) os << "modulus:    " << code.trace.modulus << "\n";
    os << "basis:      " << code.trace.basis << "\n";
    if (code.trace.offset) os << "offset:     " << *code.trace.offset << "\n";
    if (code.trace.embedded) os << "embedded:   " << code.trace.embedded->to_string() << "\n";
    if (code.trace.j) os << "j:          " << *code.trace.j << "\n";
    if (!code.trace.y_set.empty()) {
        os << "Y:          ";
        for (std::size_t i = 0; i < code.trace.y_set.size(); ++i) os << (i ? "," : "") << code.trace.y_set[i];
        os << "\n";
    }
    if (code.trace.ell) os << "ell:        " << *code.trace.ell << "\n";
    if (code.trace.d_prime) os << "D':         " << code.trace.d_prime->to_string() << "\n";
    if (code.trace.d_second) os << "D'':        " << code.trace.d_second->to_string() << "\n";
    for (int g = 0; g < code.dimension(); ++g) {
        os << "generator " << (g + 1) << ":\n" << format_matrix(code.generators[static_cast<std::size_t>(g)]);
    }
    return os.str();
}

std::string render_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "support:    " << (rep.support_ok ? "ok" : "VIOLATED") << "\n";
    os << "dimension:  " << rep.dimension << " (expected " << rep.expected_dimension << ")\n";
    os << "method:     " << rep.method << (rep.not_a_proof ? "  [not a certificate]" : "") << "\n";
    os << "checked:    " << rep.codewords_checked << " codewords\n";
    if (rep.min_rank)
        os << "min rank:   " << *rep.min_rank << (rep.method == "sampled" ? " (upper bound)" : "") << "\n";
    else
        os << "min rank:   n/a (zero code)\n";
    os << "elapsed:    " << rep.elapsed_seconds << " s\n";
    os << "result:     " << (rep.pass ? (rep.certified ? "PASS (certified)" : "PASS (not certified)") : "FAIL")
       << "\n";
    return os.str();
}

struct CommonConstructArgs {
    std::string diagram;
    int d = 0;
    std::string field;
    std::string modulus;
    std::string basis;

    FerrersCode run() const {
        const auto [p, e] = parse_field_spec(field);
        ConstructOptions opts;
        if (!modulus.empty()) opts.modulus = parse_u64_list(modulus, "modulus");
        if (!basis.empty()) opts.basis_gamma_exponents = parse_u64_list(basis, "basis");
        return construct(parse_diagram(diagram), d, p, e, opts);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum Ferrers diagram rank-metric codes: analyze, construct, verify, repro"};
    app.require_subcommand(1);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Diagram combinatorics: classes, contractions, nu tables");
    std::string an_diagram, an_primes = "2,3,5", an_format = "text", an_out;
    int an_dmin = 1, an_dmax = 0;
    analyze_cmd->add_option("--diagram", an_diagram, "column counts, e.g. 0,1,1,4,5")->required();
    analyze_cmd->add_option("--primes", an_primes, "primes for p-analysis (default 2,3,5)");
    analyze_cmd->add_option("--dmin", an_dmin, "smallest distance in the table (default 1)");
    analyze_cmd->add_option("--dmax", an_dmax, "largest distance in the table (default n)");
    analyze_cmd->add_option("--format", an_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--out", an_out, "output file (default stdout)");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Construct an MFD code for a diagram class");
    CommonConstructArgs c_args;
    std::string c_format = "json", c_out;
    construct_cmd->add_option("--diagram", c_args.diagram, "column counts")->required();
    construct_cmd->add_option("--d", c_args.d, "designed minimum rank distance")->required();
    construct_cmd->add_option("--field", c_args.field, "coefficient field, p or p^e")->required();
    construct_cmd->add_option("--modulus", c_args.modulus, "tower modulus, ascending coefficients");
    construct_cmd->add_option("--basis", c_args.basis, "compatible basis as gamma exponents");
    construct_cmd->add_option("--format", c_format, "json or text")->check(CLI::IsMember({"text", "json"}));
    construct_cmd->add_option("--out", c_out, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify support, dimension and minimum rank");
    CommonConstructArgs v_args;
    std::string v_in, v_format = "text", v_out;
    std::uint64_t v_cap = 0, v_trials = 10000, v_seed = 12345;
    verify_cmd->add_option("--in", v_in, "code artifact JSON file to verify");
    verify_cmd->add_option("--diagram", v_args.diagram, "column counts (construct then verify)");
    verify_cmd->add_option("--d", v_args.d, "designed minimum rank distance");
    verify_cmd->add_option("--field", v_args.field, "coefficient field, p or p^e");
    verify_cmd->add_option("--modulus", v_args.modulus, "tower modulus");
    verify_cmd->add_option("--basis", v_args.basis, "compatible basis as gamma exponents");
    verify_cmd->add_option("--cap", v_cap, "exhaustive enumeration cap (default 2^20 or MFD_FORGE_CAP)");
    verify_cmd->add_option("--trials", v_trials, "sampled trials when the cap is exceeded");
    verify_cmd->add_option("--seed", v_seed, "seed for sampled verification");
    verify_cmd->add_option("--format", v_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", v_out, "output file (default stdout)");

    // repro
    auto* repro_cmd = app.add_subcommand("repro", "Run a pinned reproduction scenario (or 'all')");
    std::string r_id;
    repro_cmd->add_option("id", r_id, "scenario id or 'all'")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            const FerrersDiagram diag = parse_diagram(an_diagram);
            if (an_dmax == 0) an_dmax = diag.order();
            const DiagramProfile prof =
                analyze_diagram(diag, parse_u64_list(an_primes, "primes"), an_dmin, an_dmax);
            write_output(an_out, an_format == "json" ? profile_to_json(prof).dump(2) + "\n"
                                                     : render_profile_text(prof));
            return 0;
        }
        if (*construct_cmd) {
            const FerrersCode code = c_args.run();
            write_output(c_out, c_format == "json" ? code_to_json(code).dump(2) + "\n" : render_code_text(code));
            return 0;
        }
        if (*verify_cmd) {
            if (v_cap == 0) v_cap = default_cap_from_env();
            FerrersCode code = [&] {
                if (!v_in.empty()) {
                    std::ifstream is(v_in);
                    if (!is) fail(Errc::InvalidArgument, "cannot open '" + v_in + "'");
                    json j;
                    is >> j;
                    return code_from_json(j);
                }
                if (v_args.diagram.empty() || v_args.d == 0 || v_args.field.empty())
                    fail(Errc::InvalidArgument, "verify needs --in FILE or --diagram/--d/--field");
                return v_args.run();
            }();
            const VerificationReport rep = is_mfd(code, code.diagram, code.d, v_cap, v_trials, v_seed);
            write_output(v_out, v_format == "json" ? report_to_json(rep).dump(2) + "\n" : render_report_text(rep));
            if (!rep.pass) return 2;
            return rep.certified ? 0 : 3;
        }
        if (*repro_cmd) {
            std::vector<std::string> ids =
                r_id == "all" ? golden::scenario_ids() : std::vector<std::string>{r_id};
            bool all_ok = true;
            for (const std::string& id : ids) {
                const golden::ScenarioResult res = golden::run_scenario(id);
                std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.id
                          << (res.detail.empty() ? "" : "  -- " + res.detail) << "\n";
                all_ok = all_ok && res.pass;
            }
            return all_ok ? 0 : 2;
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
