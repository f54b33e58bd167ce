#include "lacuna/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace lacuna {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json tagged_float(double value, const char* rounding) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return ordered_json{{"value", buf}, {"rounding", rounding}};
}

ordered_json complex_to_json(const ExactComplex& z) {
    return ordered_json::array({rational_to_string(z.re), rational_to_string(z.im)});
}

ordered_json report_to_json(const BoundReport& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "bound_report";
    j["case"] = case_name(r.case_tag);
    j["condition"] = condition_name(r.condition_used);
    j["rational"] = r.rational;
    j["b"] = r.b;
    j["sigma"] = r.sigma;
    j["ell_e"] = r.ell_e;
    j["rho_multiplicity_claim"] = r.rho_multiplicity_claim;
    j["z_bound"] = tagged_float(r.z_bound, "up");
    j["z_bound_int"] = r.z_bound_int;
    j["z_bound_generic"] = tagged_float(r.z_bound_generic, "up");
    if (r.z_bound_refined) j["z_bound_refined"] = tagged_float(*r.z_bound_refined, "up");
    j["rho_lb"] = tagged_float(r.rho_lb, "down");
    j["log_rho_lb"] = tagged_float(r.log_rho_lb, "down");
    j["rho_generic"] = tagged_float(r.rho_generic, "down");
    if (r.rho_refined) j["rho_refined"] = tagged_float(*r.rho_refined, "down");
    j["delta_lb"] = tagged_float(r.delta_lb, "down");
    j["log_delta_lb"] = tagged_float(r.log_delta_lb, "down");
    if (r.delta_refined_lb) {
        j["delta_refined_lb"] = tagged_float(*r.delta_refined_lb, "down");
        j["log_delta_refined_lb"] = tagged_float(*r.log_delta_refined_lb, "down");
    }
    ordered_json symbols;
    symbols["m"] = r.m;
    symbols["d"] = r.d;
    symbols["k"] = r.jet_k;
    symbols["t_bar"] = r.t_bar;
    symbols["t_bar_prime1"] = r.t_bar_prime1;
    symbols["n_bar"] = r.n_bar;
    symbols["tau_n_bar"] = r.tau_n_bar;
    symbols["tau_bar"] = r.tau_bar;
    symbols["tau_bar_prime"] = r.tau_bar_prime;
    symbols["c_bar"] = tagged_float(r.c_bar, "down");
    symbols["alpha0_abs"] = tagged_float(r.alpha0_abs, "down");
    symbols["a0_abs"] = tagged_float(r.a0_abs, "down");
    symbols["mu_abs"] = tagged_float(r.mu_abs, "down");
    symbols["delta_bar_abs"] = tagged_float(r.delta_bar_abs, "down");
    symbols["beta0_abs"] = tagged_float(r.beta0_abs, "down");
    j["symbols"] = std::move(symbols);
    return j;
}

}  // namespace

std::string emit_bound_report(const BoundReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string emit_verification_report(const BoundReport& report, const VerificationRun& run) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "verification_report";
    j["report"] = report_to_json(report);
    ordered_json v;
    v["samples"] = run.samples;
    v["skipped"] = run.skipped;
    v["max_count_quarter"] = run.max_count_quarter;
    v["max_count_rho"] = run.max_count_rho;
    v["witness_multiplicity"] = run.witness_multiplicity;
    v["passed"] = run.passed();
    ordered_json violations = ordered_json::array();
    for (const auto& viol : run.violations) {
        violations.push_back(ordered_json{
            {"sample", viol.sample}, {"where", viol.where}, {"count", viol.count}});
    }
    v["violations"] = std::move(violations);
    j["run"] = std::move(v);
    return j.dump(2) + "\n";
}

std::string emit_triangulation(const BautinMatrix& matrix) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "triangulation";
    ordered_json blocks = ordered_json::array();
    const bool equal_mult = matrix.curve.nu1 == matrix.curve.nu2;
    for (const BautinBlock& block : matrix.blocks) {
        ordered_json jb;
        jb["degree"] = block.degree;
        jb["columns"] = block.t_set.values;
        jb["row_offset"] = block.row_offset;
        auto matrix_json = [](const ExactMatrix& m) {
            ordered_json rows = ordered_json::array();
            for (const ExactRow& row : m) {
                ordered_json jr = ordered_json::array();
                for (const ExactComplex& z : row) jr.push_back(complex_to_json(z));
                rows.push_back(std::move(jr));
            }
            return rows;
        };
        jb["raw"] = matrix_json(block.entries);
        if (equal_mult) {
            KappaMatrix kappa =
                kappa_matrix(block.t_set, matrix.curve.alpha[0], matrix.curve.a[0]);
            jb["triangulated"] = matrix_json(triangulate_block(block, kappa));
        }
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j.dump(2) + "\n";
}

std::string reemit_report(const std::string& report_text) {
    ordered_json j = ordered_json::parse(report_text);
    return j.dump(2) + "\n";
}

std::string format_bound_report(const BoundReport& r) {
    std::ostringstream out;
    out << "case:            " << case_name(r.case_tag) << "\n";
    out << "condition:       " << condition_name(r.condition_used) << "\n";
    out << "b (Bautin idx):  " << r.b << "\n";
    out << "sigma (rank):    " << r.sigma << "\n";
    out << "Z bound:         " << r.z_bound << "  (ceil " << r.z_bound_int << ")\n";
    out << "rho:             " << r.rho_lb << "  (log " << r.log_rho_lb << ")\n";
    out << "delta lower bd:  " << r.delta_lb << "  (log " << r.log_delta_lb << ")\n";
    if (r.z_bound_refined)
        out << "Z refined (L1):  " << *r.z_bound_refined << "\n";
    out << "symbols:         m=" << r.m << " d=" << r.d << " k=" << r.jet_k
        << " ell_e=" << r.ell_e << " t_bar=" << r.t_bar << " tau_n_bar=" << r.tau_n_bar
        << " tau_bar=" << r.tau_bar << " tau_bar'=" << r.tau_bar_prime
        << " n_bar=" << r.n_bar << " C_bar=" << r.c_bar << "\n";
    out << "magnitudes:      |alpha0|=" << r.alpha0_abs << " |a0|=" << r.a0_abs
        << " |mu|=" << r.mu_abs << " |delta_bar|=" << r.delta_bar_abs;
    if (r.rational) out << " |beta0|=" << r.beta0_abs;
    out << "\n";
    return out.str();
}

std::string format_verification_run(const VerificationRun& run) {
    std::ostringstream out;
    out << "samples:             " << run.samples << " (skipped " << run.skipped << ")\n";
    out << "max count |z|<=1/4:  " << run.max_count_quarter << "\n";
    out << "max count |z|<=rho:  " << run.max_count_rho << "\n";
    out << "witness valuation:   " << run.witness_multiplicity << "\n";
    out << "violations:          " << run.violations.size() << "\n";
    for (const auto& v : run.violations)
        out << "  sample " << v.sample << " in " << v.where << ": count " << v.count << "\n";
    return out.str();
}

}  // namespace lacuna
