// Command-line driver for the exact verification suites.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 malformed
// input or usage error.

#include "octdirac/octdirac.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace octdirac;

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = default_sampler_seed;
    std::string tables_path;
};

int emit(const std::vector<VerificationReport>& reports, const GlobalOptions& opts) {
    bool all_pass = true;
    if (opts.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) {
            out.push_back(render_json(r));
            all_pass = all_pass && r.passed();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            render_text(r, std::cout);
            all_pass = all_pass && r.passed();
        }
    }
    return all_pass ? 0 : 1;
}

int emit(const VerificationReport& report, const GlobalOptions& opts) {
    return emit(std::vector<VerificationReport>{report}, opts);
}

GeneratorTables tables_for(const GlobalOptions& opts) {
    if (opts.tables_path.empty()) return default_generator_tables();
    return load_generator_tables(opts.tables_path);
}

// "i:m,n,k" replaces the i-th (0-based) structure triple with (m,n,k).
std::vector<Triple> corrupted_triples(const std::string& spec) {
    std::vector<Triple> triples(standard_triples.begin(), standard_triples.end());
    unsigned idx = 0, m = 0, n = 0, k = 0;
    if (std::sscanf(spec.c_str(), "%u:%u,%u,%u", &idx, &m, &n, &k) != 4 || idx >= triples.size())
        throw ParseError("corrupt-triple spec must be 'index:m,n,k' with index in 0..6");
    triples[idx] = Triple{static_cast<int>(m), static_cast<int>(n), static_cast<int>(k)};
    return triples;
}

// "name:slot:factor" replaces one tensor factor of the named record.
GeneratorTables corrupted_tables(GeneratorTables tables, const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = spec.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw ParseError("corrupt-factor spec must be 'name:slot:factor'");
    const std::string name = spec.substr(0, first);
    const std::string slot = spec.substr(first + 1, second - first - 1);
    const std::string factor = spec.substr(second + 1);
    if (slot.size() != 1 || slot[0] < '0' || slot[0] > '2')
        throw ParseError("corrupt-factor slot must be 0, 1, or 2");
    return with_corrupted_factor(std::move(tables), name,
                                 static_cast<std::size_t>(slot[0] - '0'), factor);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact octonion / Dirac-matrix verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    GlobalOptions global;
    app.add_option("--format", global.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for the randomized property checks")
        ->capture_default_str();
    app.add_option("--tables", global.tables_path,
                   "Generator tables file (defaults to the built-in tables)");

    // verify-octonion
    auto* oct = app.add_subcommand("verify-octonion", "Run the octonion algebra suite");
    std::string corrupt_triple;
    oct->add_option("--corrupt-triple", corrupt_triple,
                    "Testing hook: replace structure triple, 'index:m,n,k'");

    // verify-clifford <target>
    auto* cliff = app.add_subcommand("verify-clifford", "Run a matrix-realization suite");
    std::string target_name;
    cliff->add_option("target", target_name, "gamma4 | gamma11 | units | table1")
        ->required()
        ->check(CLI::IsMember({"gamma4", "gamma11", "units", "table1"}));
    std::string corrupt_factor;
    cliff->add_option("--corrupt-factor", corrupt_factor,
                      "Testing hook: replace a tensor factor, 'name:slot:factor'");
    bool skip_span = false;
    cliff->add_flag("--skip-span", skip_span, "Skip the span-dimension checks");

    // g2 subcommands
    auto* g2 = app.add_subcommand("g2", "Automorphism machinery");
    g2->require_subcommand(1);
    g2->add_subcommand("derivation-dim", "Compute the derivation-algebra dimension");
    auto* g2check = g2->add_subcommand("check", "Validate a 7x7 transform from a file");
    std::string transform_path;
    g2check->add_option("file", transform_path, "Row-major 7x7 matrix file")->required();
    auto* g2exp = g2->add_subcommand("exp", "Exponentiate a basis derivation and validate");
    std::size_t basis_index = 0;
    double exp_t = 0.0;
    g2exp->add_option("basis-index", basis_index, "Basis derivation index, 0..13")->required();
    g2exp->add_option("t", exp_t, "Flow parameter")->required();

    // perturb
    auto* perturb = app.add_subcommand("perturb", "First-order construction suite");
    std::vector<std::string> lambda_args;
    perturb->add_option("--lambda", lambda_args,
                        "Rational scale(s); one for pointwise residuals, three or more for "
                        "polynomial extraction (default 1/64 1/32 1/16)");
    std::string seed_file;
    perturb->add_option("--seed-file", seed_file, "Seed matrices file (128 rational entries)");

    // fold
    auto* fold = app.add_subcommand("fold", "Fold an amplitude chain both ways");
    std::string chain_path;
    fold->add_option("file", chain_path, "Chain file, one octonion (8 rationals) per line")
        ->required();

    // verify-all
    app.add_subcommand("verify-all", "Run every suite in dependency order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (oct->parsed()) {
            OctonionSuiteOptions opts;
            opts.seed = global.seed;
            if (!corrupt_triple.empty()) opts.triples = corrupted_triples(corrupt_triple);
            return emit(run_octonion_suite(opts), global);
        }
        if (cliff->parsed()) {
            CliffordSuiteOptions opts;
            opts.tables = tables_for(global);
            if (!corrupt_factor.empty()) opts.tables = corrupted_tables(opts.tables, corrupt_factor);
            opts.include_span = !skip_span;
            CliffordTarget target = CliffordTarget::gamma4;
            if (target_name == "gamma11") target = CliffordTarget::gamma11;
            else if (target_name == "units") target = CliffordTarget::units;
            else if (target_name == "table1") target = CliffordTarget::table1;
            return emit(run_clifford_suite(target, opts), global);
        }
        if (g2->parsed()) {
            if (g2check->parsed()) return emit(run_g2_check_suite(load_transform(transform_path)), global);
            if (g2exp->parsed()) return emit(run_g2_exp_suite(basis_index, exp_t), global);
            return emit(run_g2_dimension_suite(), global);
        }
        if (perturb->parsed()) {
            PerturbSuiteOptions opts;
            opts.seed = global.seed;
            for (const auto& l : lambda_args) opts.lambdas.push_back(parse_rational(l));
            if (!seed_file.empty()) {
                Rational lambda = opts.lambdas.empty() ? rat(1, 16) : opts.lambdas.back();
                opts.seed_from_file = load_seed(seed_file, lambda);
            }
            return emit(run_perturbation_suite(opts), global);
        }
        if (fold->parsed()) return emit(run_fold_report(load_chain(chain_path)), global);
        // verify-all
        return emit(run_all_suites(global.seed), global);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
