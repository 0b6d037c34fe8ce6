// triality: verification driver for the octonion / Spin8 triality library.
//
//   triality verify-all  [--seed N] [--trials N] [--eps E] [--backend exact|float|both] [--out PATH]
//   triality fixset      <v> [options]
//   triality antipodal   <v> [options]
//   triality kai         [options]
//   triality table
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "triality/verify.hpp"

namespace {

using namespace triality;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliOptions {
    RunConfig cfg;
    std::string backend = "both";
    std::string out;
    std::string v;
};

void add_run_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--seed", opts.cfg.seed, "Base random seed")->capture_default_str();
    cmd->add_option("--trials", opts.cfg.trials, "Sample count scale")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--eps", opts.cfg.eps, "Float-backend absolute tolerance")->capture_default_str();
    cmd->add_option("--backend", opts.backend, "exact | float | both")
        ->capture_default_str()
        ->check(CLI::IsMember({"exact", "float", "both"}));
    cmd->add_option("--out", opts.out, "Write the JSON report here instead of stdout");
}

void emit(const json& report, const RunConfig& cfg) {
    const std::string text = report.dump(2) + "\n";
    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary);
        if (!file) throw Error("cannot open output file " + *cfg.output_path);
        file << text;
    } else {
        std::cout << text;
    }
}

template <ScalarWithSqrt3 S>
bool wants(const RunConfig& cfg) {
    if constexpr (S::is_exact) return cfg.backend != BackendSelector::floating;
    else return cfg.backend != BackendSelector::exact;
}

template <ScalarWithSqrt3 S>
ImaginaryUnit<S> parse_direction(const std::string& literal) {
    return ImaginaryUnit<S>(parse_octonion<S>(literal));
}

template <ScalarWithSqrt3 S>
json fixset_for(const std::string& literal, bool& ok) {
    const ImaginaryUnit<S> v = parse_direction<S>(literal);
    const SpherePoint<S> p = fix_tau_point(v);
    const SpherePoint<S> tp = tau_sphere(p);
    const SpherePoint<S> ttp = tau_sphere(tp);
    const Octonion<S>& s = p.x();
    const bool fixed = is_fixed_by_tau(p);
    const bool cube = s * s * s == Octonion<S>::one();
    const bool square = s * s == s.conj();
    const bool origin_fixed = is_fixed_by_tau(SpherePoint<S>::origin());
    ok = ok && fixed && cube && square && origin_fixed;
    std::cerr << "[" << backend_name<S>() << "] s = " << to_string(s) << (fixed ? "  tau-fixed" : "  NOT tau-fixed")
              << "\n";
    return {{"backend", std::string(backend_name<S>())},
            {"v", to_string(v.value())},
            {"o", point_to_json(SpherePoint<S>::origin())},
            {"o_fixed", origin_fixed},
            {"point", point_to_json(p)},
            {"s", to_string(s)},
            {"tau_orbit", {point_to_json(p), point_to_json(tp), point_to_json(ttp)}},
            {"tau_fixed", fixed},
            {"s_cubed_is_one", cube},
            {"s_squared_is_conj", square}};
}

template <ScalarWithSqrt3 S>
json antipodal_for(const std::string& literal, const RunConfig& cfg, bool& ok) {
    const ToleranceScope tolerance(cfg.eps);
    const ImaginaryUnit<S> v = parse_direction<S>(literal);
    const AntipodalSet<S> set = antipodal_set(v);
    json certs = json::array();
    bool certs_ok = true;
    for (const auto& c : set.certificates()) {
        certs_ok = certs_ok && c.fixed;
        certs.push_back({{"basepoint", c.basepoint}, {"point", c.point}, {"fixed", c.fixed}, {"residual", c.residual}});
    }
    const int scan_trials = 10 * cfg.trials;
    const ScanReport<S> scan = maximality_scan(v, scan_trials, derive_seed(cfg.seed, S::is_exact ? 0 : 1));
    const PolarIntersectionReport polar = polar_intersection_check(v);
    const bool swaps = set.sigma_swaps();
    ok = ok && certs_ok && swaps && scan.exact_three() && polar.holds();

    std::cerr << "[" << backend_name<S>() << "] P = {o, p, q}, s = " << to_string(set.s()) << "\n"
              << "  antipodal certificates: " << (certs_ok ? "pass" : "FAIL") << "\n"
              << "  sigma swaps p and q:    " << (swaps ? "yes" : "NO") << "\n"
              << "  maximality scan:        " << scan.accepted_count << " accepted of " << scan.entries.size()
              << ", extra " << scan.extra_acceptances << "\n"
              << "  polar intersections:    " << (polar.holds() ? "pass" : "FAIL") << "\n";

    return {{"backend", std::string(backend_name<S>())},
            {"v", to_string(v.value())},
            {"points",
             {{"o", point_to_json(set.points()[0])},
              {"p", point_to_json(set.points()[1])},
              {"q", point_to_json(set.points()[2])}}},
            {"certificates", certs},
            {"sigma_swaps_p_q", swaps},
            {"polar_intersection", polar.holds()},
            {"maximality",
             {{"random_trials", scan_trials},
              {"accepted", scan.accepted_count},
              {"extra_acceptances", scan.extra_acceptances},
              {"accepts_exactly_opq", scan.exact_three()},
              {"scan", scan_to_json(scan)}}}};
}

json base_report(const std::string& command, const RunConfig& cfg) {
    return {{"schema", 1}, {"command", command}, {"config", config_to_json(cfg)}};
}

int cmd_verify_all(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_all(cfg, [](const CheckResult& r) {
        std::cerr << (r.pass ? "  pass  " : "  FAIL  ") << r.name << " [" << r.backend << "] residual "
                  << r.max_residual << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
    });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(make_report(cfg, results), cfg);
    const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    std::cerr << passed << "/" << results.size() << " checks passed in " << seconds << " s\n";
    return all_pass(results) ? kExitPass : kExitFail;
}

int cmd_kai(const RunConfig& cfg) {
    constexpr std::size_t kKaiIndex = 14;
    static_assert(std::string_view(kChecks[kKaiIndex].name) == "kai_property");
    std::vector<CheckResult> results;
    if (wants<QuadExt>(cfg)) results.push_back(run_check<QuadExt>(kKaiIndex, cfg));
    if (wants<ApproxReal>(cfg)) results.push_back(run_check<ApproxReal>(kKaiIndex, cfg));
    for (const auto& r : results)
        std::cerr << (r.pass ? "  pass  " : "  FAIL  ") << "kai [" << r.backend << "] " << r.trials
                  << " configurations, residual " << r.max_residual << "\n";
    emit(make_report(cfg, results), cfg);
    return all_pass(results) ? kExitPass : kExitFail;
}

int cmd_fixset(const CliOptions& opts) {
    const RunConfig& cfg = opts.cfg;
    const ToleranceScope tolerance(cfg.eps);
    json report = base_report("fixset", cfg);
    report["results"] = json::array();
    bool ok = true;
    if (wants<QuadExt>(cfg)) report["results"].push_back(fixset_for<QuadExt>(opts.v, ok));
    if (wants<ApproxReal>(cfg)) report["results"].push_back(fixset_for<ApproxReal>(opts.v, ok));
    emit(report, cfg);
    return ok ? kExitPass : kExitFail;
}

int cmd_antipodal(const CliOptions& opts) {
    const RunConfig& cfg = opts.cfg;
    json report = base_report("antipodal", cfg);
    report["results"] = json::array();
    bool ok = true;
    if (wants<QuadExt>(cfg)) report["results"].push_back(antipodal_for<QuadExt>(opts.v, cfg, ok));
    if (wants<ApproxReal>(cfg)) report["results"].push_back(antipodal_for<ApproxReal>(opts.v, cfg, ok));
    emit(report, cfg);
    return ok ? kExitPass : kExitFail;
}

/// Rows e_i, columns e_j, entries ±e_k.
int cmd_table() {
    const auto& table = multiplication_table();
    std::cout << "      ";
    for (int j = 1; j <= 8; ++j) std::cout << "   e" << j;
    std::cout << "\n";
    for (std::size_t i = 0; i < 8; ++i) {
        std::cout << "  e" << i + 1 << " ";
        for (std::size_t j = 0; j < 8; ++j) {
            const ProductEntry e = table[i][j];
            std::cout << "  " << (e.sign < 0 ? '-' : '+') << "e" << e.index + 1;
        }
        std::cout << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of octonion triality and the antipodal set of S7 x S7 = Spin8/G2"};
    app.require_subcommand(1);

    CliOptions opts;
    auto* verify = app.add_subcommand("verify-all", "Run every check on the selected backends");
    auto* fixset = app.add_subcommand("fixset", "Fixed point (s, conj s) of tau for a unit imaginary v");
    auto* antipodal = app.add_subcommand("antipodal", "Antipodal set {o, p, q} for v with certificates");
    auto* kai = app.add_subcommand("kai", "Randomized check of the kai conjugation identity");
    auto* table = app.add_subcommand("table", "Print the octonion multiplication table");
    for (auto* cmd : {verify, fixset, antipodal, kai}) add_run_options(cmd, opts);
    for (auto* cmd : {fixset, antipodal})
        cmd->add_option("v", opts.v, "Unit imaginary octonion, e.g. \"[0,1,0,0,0,0,0,0]\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        opts.cfg.backend = parse_backend(opts.backend);
        if (!opts.out.empty()) opts.cfg.output_path = opts.out;
        opts.cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    ApproxReal::default_eps() = opts.cfg.eps;

    try {
        if (*verify) return cmd_verify_all(opts.cfg);
        if (*kai) return cmd_kai(opts.cfg);
        if (*fixset) return cmd_fixset(opts);
        if (*antipodal) return cmd_antipodal(opts);
        if (*table) return cmd_table();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotImaginaryUnit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
