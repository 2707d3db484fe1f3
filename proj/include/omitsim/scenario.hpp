#pragma once
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omitsim/params.hpp"
#include "omitsim/response.hpp"

namespace omitsim {

enum class AxisQuantity { delta, pump_power, g0, g_ac, kappa, delta_a };

const char* axis_name(AxisQuantity q);             // config spelling
const char* axis_column(AxisQuantity q);           // CSV column header
AxisQuantity axis_from_name(const std::string& s); // throws config_error

enum class Observable { T_sq, phi, tau_g, c_minus, steady };

struct AxisSpec {
    AxisQuantity quantity = AxisQuantity::delta;
    double min = 0.0; // rad/s for frequency-like axes, W for pump_power
    double max = 0.0;
    int count = 0;
};

// One sweep: a base parameter set, one swept quantity, requested observables.
struct Scenario {
    std::string name;
    SystemParams sys{};
    bool drive_is_power = false;
    double e_l = 0.0;          // rad/s, used when !drive_is_power
    double pump_power_w = 0.0; // used when drive_is_power
    bool probe_is_abs = false;
    double probe_ratio = 1e-4; // e_p = probe_ratio * e_l
    double e_p_abs = 0.0;      // rad/s, used when probe_is_abs
    double delta0 = 0.0;       // probe detuning for non-delta axes; 0 -> omega_m
    AxisSpec axis{};
    std::vector<Observable> outputs;
    Variant variant = Variant::oracle_consistent;
};

// Validation of the scenario itself (grid arity, axis ranges, base params).
ValidationReport validate_scenario(const Scenario& s);

struct SweepRow {
    double axis_value = 0.0; // Hz for frequency axes, W for power
    bool failed = false;
    std::string error;
    double T_sq = 0.0;
    double phi_t = 0.0;
    double tau_g = 0.0;
    std::complex<double> c_minus;
    double n_s = 0.0;
    double delta_tilde = 0.0; // rad/s
    std::complex<double> c_s;
};

struct SweepResult {
    Scenario scenario;
    std::vector<SweepRow> rows;
    int failed_points = 0;
    std::string tool_version;
    std::string tolerance_profile;
};

struct RunOptions {
    int workers = 0; // 0 -> all cores
    std::string tolerance_profile = "default"; // "default" | "strict"
    std::optional<Variant> variant_override;
};

// Executes the sweep; per-point failures are recorded in the rows and the run
// continues. Throws scenario_error if every point failed.
SweepResult run_scenario(const Scenario& s, const RunOptions& opt = {});

// Flat key-value config. The argument is a path if it names a readable file,
// otherwise it is parsed as config text. Unknown keys are hard errors.
Scenario load_config(const std::string& path_or_text);
std::string serialize(const Scenario& s);

// Built-in presets, keyed by family name; multi-curve figures expand to one
// scenario per curve.
const std::map<std::string, std::vector<Scenario>>& builtin_presets();
std::vector<Scenario> preset(const std::string& name); // throws config_error

} // namespace omitsim
