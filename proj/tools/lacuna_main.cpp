#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lacuna/config.hpp"
#include "lacuna/lemma_suites.hpp"
#include "lacuna/rational_ext.hpp"
#include "lacuna/report_io.hpp"
#include "lacuna/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitConditionViolation = 2;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string condition;
    double precision = -1;
    long long samples = -1;
    long long seed = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_config) {
    auto* opt = cmd->add_option("--config", args.config_path, "problem config (JSON)");
    if (needs_config) opt->required();
    cmd->add_option("--out", args.out_path, "write the machine report here");
    cmd->add_option("--condition", args.condition, "l1, l2, l3 or auto")
        ->check(CLI::IsMember({"l1", "l2", "l3", "auto"}));
    cmd->add_option("--precision", args.precision, "normalization precision");
    cmd->add_option("--samples", args.samples, "verification sample count");
    cmd->add_option("--seed", args.seed, "verification RNG seed");
}

lacuna::ProblemConfig load_problem(const CommonArgs& args) {
    lacuna::ProblemConfig config = lacuna::load_config(args.config_path);
    if (!args.condition.empty()) config.options.condition = args.condition;
    if (args.precision > 0) config.options.precision = args.precision;
    if (args.samples >= 0) config.options.samples = static_cast<std::size_t>(args.samples);
    if (args.seed >= 0) config.options.seed = static_cast<std::uint64_t>(args.seed);
    return config;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lacuna::Error("cannot write '" + path + "'");
    out << text;
}

int report_condition_failure(const lacuna::ConditionTag& tag) {
    std::cerr << "condition " << lacuna::condition_name(tag.kind) << " fails";
    if (tag.witness)
        std::cerr << " at blocks (" << tag.witness->first << ", " << tag.witness->second
                  << ")";
    std::cerr << "\n";
    return kExitConditionViolation;
}

int cmd_bound(const CommonArgs& args, bool also_verify) {
    lacuna::ProblemConfig config = load_problem(args);
    lacuna::ConditionTag condition = lacuna::resolve_condition(config);
    if (!condition.holds) return report_condition_failure(condition);

    lacuna::NormalizedCurve normalized =
        lacuna::normalize_curve(config.curve, config.options.radius, config.options.precision);
    lacuna::BoundReport report =
        config.curve.is_rational()
            ? lacuna::rational_bound_report(normalized, config.diagram, condition)
            : lacuna::zero_bound_report(normalized, config.diagram, condition);

    std::cout << lacuna::format_bound_report(report);
    if (!also_verify) {
        write_out(args.out_path, lacuna::emit_bound_report(report));
        return kExitOk;
    }

    lacuna::VerificationRun run = lacuna::verify_run(
        normalized, config.diagram, report, config.options.samples, config.options.seed);
    std::cout << lacuna::format_verification_run(run);
    write_out(args.out_path, lacuna::emit_verification_report(report, run));
    return run.passed() ? kExitOk : kExitError;
}

int cmd_triangulate(const CommonArgs& args) {
    lacuna::ProblemConfig config = load_problem(args);
    // Triangulation acts on the numerator pair; the denominator only
    // shifts rows through the G factor.
    lacuna::ParamCurve curve =
        config.curve.is_rational()
            ? lacuna::ParamCurve::make(config.curve.p1, config.curve.p2)
            : config.curve;
    lacuna::BautinMatrix matrix = lacuna::assemble_matrix(curve, config.diagram);
    std::string text = lacuna::emit_triangulation(matrix);
    if (args.out_path.empty())
        std::cout << text;
    else
        write_out(args.out_path, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform intersection bounds for lacunary plane curves"};
    app.require_subcommand(1);

    CommonArgs bound_args, verify_args, triangulate_args;
    long long t_max = 8;
    bool fault_inject = false;

    CLI::App* bound = app.add_subcommand("bound", "compute the bound report");
    add_common(bound, bound_args, true);
    CLI::App* verify = app.add_subcommand("verify", "bound report plus sampled verification");
    add_common(verify, verify_args, true);
    CLI::App* triangulate =
        app.add_subcommand("triangulate", "dump the exact triangulated Bautin blocks");
    add_common(triangulate, triangulate_args, true);
    CLI::App* lemmas =
        app.add_subcommand("check-lemmas", "run the exhaustive combinatorial identity suites");
    lemmas->add_option("--t-max", t_max, "largest node for the extraction identity");
    lemmas->add_flag("--fault-inject", fault_inject,
                     "negative control: flip one weight sign and expect failure");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(bound_args, false);
        if (verify->parsed()) return cmd_bound(verify_args, true);
        if (triangulate->parsed()) return cmd_triangulate(triangulate_args);
        if (lemmas->parsed()) {
            bool ok = lacuna::run_lemma_suites(t_max, fault_inject, std::cout);
            std::cout << (ok ? "all identities hold\n" : "identity check FAILED\n");
            return ok ? kExitOk : kExitError;
        }
    } catch (const lacuna::ConditionViolation& e) {
        std::cerr << "error: " << e.what() << " (blocks " << e.ell << ", " << e.ell_prime
                  << ")\n";
        return kExitConditionViolation;
    } catch (const lacuna::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
