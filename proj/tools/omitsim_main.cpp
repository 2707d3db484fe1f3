#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "omitsim/csv_io.hpp"
#include "omitsim/errors.hpp"
#include "omitsim/oracle_check.hpp"
#include "omitsim/scenario.hpp"
#include "omitsim/units.hpp"
#include "omitsim/version.hpp"

using namespace omitsim;

namespace {

std::string default_out_dir() {
    if (const char* env = std::getenv("OMITSIM_OUT_DIR"); env && *env)
        return env;
    return "out";
}

std::vector<Scenario> resolve(const std::string& what) {
    try {
        return preset(what);
    } catch (const config_error&) {
        return {load_config(what)};
    }
}

int cmd_run(const std::string& what, const std::string& out_dir,
            const std::string& variant, int workers,
            const std::string& profile) {
    RunOptions opt;
    opt.workers = workers;
    opt.tolerance_profile = profile;
    if (!variant.empty()) opt.variant_override = variant_from_name(variant);

    int failed_points = 0;
    for (const Scenario& s : resolve(what)) {
        const SweepResult res = run_scenario(s, opt);
        const OutputManifest man = write_outputs(res, out_dir);
        std::printf("%s: %zu points, %d failed -> %s\n", s.name.c_str(),
                    res.rows.size(), res.failed_points, man.csv_path.c_str());
        failed_points += res.failed_points;
    }
    return failed_points == 0 ? 0 : 1;
}

int cmd_list_presets() {
    for (const auto& [family, members] : builtin_presets()) {
        std::printf("%s\n", family.c_str());
        if (members.size() > 1 || members.front().name != family)
            for (const auto& s : members)
                std::printf("  %s\n", s.name.c_str());
    }
    return 0;
}

int cmd_validate(const std::string& path) {
    try {
        const Scenario s = load_config(path);
        const ValidationReport r = validate_scenario(s);
        std::printf("%s: %s\n", s.name.c_str(), r.passed ? "PASS" : "FAIL");
        for (const auto& v : r.violations) std::printf("  violation: %s\n", v.c_str());
        std::printf("  sideband_resolved: %s\n", r.sideband_resolved ? "yes" : "no");
        return r.passed ? 0 : 1;
    } catch (const config_error& e) {
        std::printf("FAIL: %s\n", e.what());
        return 1;
    }
}

int cmd_oracle_check(const std::string& what, const std::string& dump,
                     int max_points, const std::string& profile) {
    OracleCheckOptions opt;
    opt.dump_path = dump;
    opt.max_points = max_points;
    if (profile == "strict") {
        opt.controls.rel_tol = 1e-11;
        opt.controls.abs_tol = 1e-13;
    }
    const double tol = 1e-3;
    bool all_ok = true;
    for (const Scenario& s : resolve(what)) {
        try {
            const OracleCheckResult r = oracle_check(s, opt);
            for (const auto& pt : r.points)
                std::printf("  delta/2pi = %.6g Hz  |c-|_formula = %.6e  "
                            "rel diff = %.3e\n",
                            angular_to_cyclic(pt.delta), std::abs(pt.c_formula),
                            pt.rel_diff);
            const bool ok = r.max_rel_diff < tol;
            all_ok = all_ok && ok;
            std::printf("%s: max rel diff %.3e (steady %.3e) -> %s\n",
                        r.scenario.c_str(), r.max_rel_diff,
                        r.max_steady_rel_diff, ok ? "PASS" : "FAIL");
        } catch (const instability_error& e) {
            std::printf("%s: UNSTABLE (%s)\n", s.name.c_str(), e.what());
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pump-probe response simulator for a hybrid optomechanical "
                 "cavity (mirror + two-level atom)"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir = default_out_dir();
    std::string variant;
    std::string profile = "default";
    int workers = 0;
    app.add_option("--out-dir", out_dir, "output directory (env OMITSIM_OUT_DIR)");
    app.add_option("--variant", variant,
                   "response variant: oracle-consistent | paper-literal")
        ->check(CLI::IsMember({"oracle-consistent", "paper-literal"}));
    app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_option("--tolerance-profile", profile, "default | strict")
        ->check(CLI::IsMember({"default", "strict"}));

    std::string run_arg;
    auto* run = app.add_subcommand("run", "run a preset or config file");
    run->add_option("preset-or-config", run_arg, "preset name or config path")
        ->required();

    auto* lp = app.add_subcommand("list-presets", "list built-in presets");

    std::string validate_arg;
    auto* val = app.add_subcommand("validate", "validate a config file");
    val->add_option("config", validate_arg, "config path or text")->required();

    std::string oc_arg, oc_dump;
    int oc_points = 0;
    auto* oc = app.add_subcommand(
        "oracle-check", "compare closed-form response to time-domain integration");
    oc->add_option("preset-or-config", oc_arg, "preset name or config path")
        ->required();
    oc->add_option("--dump-trajectory", oc_dump,
                   "write the last point's trajectory as CSV");
    oc->add_option("--points", oc_points, "subsample the delta grid (0 = all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_arg, out_dir, variant, workers, profile);
        if (*lp) return cmd_list_presets();
        if (*val) return cmd_validate(validate_arg);
        if (*oc) return cmd_oracle_check(oc_arg, oc_dump, oc_points, profile);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
