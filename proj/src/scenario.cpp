#include "omitsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "omitsim/csv_io.hpp"
#include "omitsim/dispersion.hpp"
#include "omitsim/errors.hpp"
#include "omitsim/units.hpp"
#include "omitsim/version.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace omitsim {

const char* axis_name(AxisQuantity q) {
    switch (q) {
    case AxisQuantity::delta: return "delta";
    case AxisQuantity::pump_power: return "pump-power";
    case AxisQuantity::g0: return "g0";
    case AxisQuantity::g_ac: return "g_ac";
    case AxisQuantity::kappa: return "kappa";
    case AxisQuantity::delta_a: return "delta_a";
    }
    return "?";
}

const char* axis_column(AxisQuantity q) {
    switch (q) {
    case AxisQuantity::delta: return "delta_hz";
    case AxisQuantity::pump_power: return "pump_power_w";
    case AxisQuantity::g0: return "g0_hz";
    case AxisQuantity::g_ac: return "g_ac_hz";
    case AxisQuantity::kappa: return "kappa_hz";
    case AxisQuantity::delta_a: return "delta_a_hz";
    }
    return "?";
}

AxisQuantity axis_from_name(const std::string& s) {
    if (s == "delta") return AxisQuantity::delta;
    if (s == "pump-power") return AxisQuantity::pump_power;
    if (s == "g0") return AxisQuantity::g0;
    if (s == "g_ac") return AxisQuantity::g_ac;
    if (s == "kappa") return AxisQuantity::kappa;
    if (s == "delta_a") return AxisQuantity::delta_a;
    throw config_error("unknown axis quantity '" + s + "'");
}

namespace {

const char* observable_name(Observable o) {
    switch (o) {
    case Observable::T_sq: return "T_sq";
    case Observable::phi: return "phi";
    case Observable::tau_g: return "tau_g";
    case Observable::c_minus: return "c_minus";
    case Observable::steady: return "steady";
    }
    return "?";
}

Observable observable_from_name(const std::string& s) {
    if (s == "T_sq") return Observable::T_sq;
    if (s == "phi") return Observable::phi;
    if (s == "tau_g") return Observable::tau_g;
    if (s == "c_minus") return Observable::c_minus;
    if (s == "steady") return Observable::steady;
    throw config_error("unknown observable '" + s + "'");
}

} // namespace

ValidationReport validate_scenario(const Scenario& s) {
    ValidationReport r = validate(s.sys);
    auto fail = [&r](const std::string& msg) {
        r.passed = false;
        r.violations.push_back(msg);
    };
    if (s.name.empty()) fail("scenario name must not be empty");
    if (s.axis.count < 2) fail("axis count must be >= 2 for a sweep");
    if (!(s.axis.max > s.axis.min)) fail("axis max must exceed axis min");
    if (s.outputs.empty()) fail("outputs must not be empty");
    if (s.drive_is_power) {
        if (!(s.pump_power_w >= 0)) fail("pump power must be nonnegative");
    } else if (s.axis.quantity != AxisQuantity::pump_power) {
        if (!(s.e_l >= 0)) fail("E_l must be nonnegative");
    }
    if (s.probe_is_abs) {
        if (!(s.e_p_abs > 0)) fail("E_p must be positive");
    } else if (!(s.probe_ratio > 0)) {
        fail("probe ratio must be positive");
    }
    if (s.axis.quantity == AxisQuantity::pump_power && s.axis.min < 0)
        fail("pump power axis must be nonnegative");
    return r;
}

namespace {

struct PointTask {
    SystemParams sys;
    double e_l;
    double e_p;
    double delta_probe; // detuning at which T/c_minus are evaluated
};

// applies the axis value (internal units) to a copy of the scenario base
PointTask resolve_point(const Scenario& s, double axis_internal) {
    PointTask pt;
    pt.sys = s.sys;
    pt.delta_probe = s.delta0 > 0 ? s.delta0 : s.sys.omega_m;
    switch (s.axis.quantity) {
    case AxisQuantity::delta: pt.delta_probe = axis_internal; break;
    case AxisQuantity::pump_power: break; // handled below
    case AxisQuantity::g0: pt.sys.g0 = axis_internal; break;
    case AxisQuantity::g_ac: pt.sys.g_ac = axis_internal; break;
    case AxisQuantity::kappa: pt.sys.kappa = axis_internal; break;
    case AxisQuantity::delta_a: pt.sys.delta_a = axis_internal; break;
    }
    if (s.axis.quantity == AxisQuantity::pump_power) {
        pt.e_l = power_to_amplitude(axis_internal, pt.sys.lambda_l, pt.sys.kappa);
    } else if (s.drive_is_power) {
        pt.e_l = power_to_amplitude(s.pump_power_w, pt.sys.lambda_l, pt.sys.kappa);
    } else {
        pt.e_l = s.e_l;
    }
    pt.e_p = s.probe_is_abs ? s.e_p_abs : s.probe_ratio * pt.e_l;
    if (pt.e_p <= 0.0) pt.e_p = 1.0; // T and tau_g are E_p-independent
    return pt;
}

bool wants(const Scenario& s, Observable o) {
    return std::find(s.outputs.begin(), s.outputs.end(), o) != s.outputs.end();
}

} // namespace

SweepResult run_scenario(const Scenario& s, const RunOptions& opt) {
    {
        const ValidationReport r = validate_scenario(s);
        if (!r.passed) {
            std::string msg = "invalid scenario '" + s.name + "':";
            for (const auto& v : r.violations) msg += " " + v + ";";
            throw scenario_error(msg);
        }
    }
    Scenario sc = s;
    if (opt.variant_override) sc.variant = *opt.variant_override;

    DelayOptions delay_opt;
    delay_opt.variant = sc.variant;
    if (opt.tolerance_profile == "strict")
        delay_opt.rel_tol = 1e-4;
    else if (opt.tolerance_profile != "default")
        throw config_error("unknown tolerance profile '" + opt.tolerance_profile +
                           "' (expected default or strict)");

    const int n = sc.axis.count;
    const bool freq_axis = sc.axis.quantity != AxisQuantity::pump_power;
    std::vector<double> axis_internal(n), axis_file(n);
    for (int i = 0; i < n; ++i) {
        const double v =
            sc.axis.min + (sc.axis.max - sc.axis.min) * i / double(n - 1);
        axis_internal[i] = v;
        axis_file[i] = freq_axis ? angular_to_cyclic(v) : v;
    }

    SweepResult result;
    result.scenario = sc;
    result.rows.resize(n);
    result.tool_version = version;
    result.tolerance_profile = opt.tolerance_profile;

    const bool delta_axis = sc.axis.quantity == AxisQuantity::delta;

    auto eval_point = [&](int i) {
        SweepRow& row = result.rows[i];
        row.axis_value = axis_file[i];
        try {
            const PointTask pt = resolve_point(sc, axis_internal[i]);
            const SteadyState st = solve_steady_state(pt.sys, pt.e_l);
            if (wants(sc, Observable::steady)) {
                row.n_s = st.n_s;
                row.delta_tilde = st.delta_tilde;
                row.c_s = st.c_s;
            }
            if (wants(sc, Observable::T_sq) || wants(sc, Observable::phi) ||
                wants(sc, Observable::c_minus)) {
                const ProbeResponse pr = probe_response(
                    pt.sys, st, pt.e_p, pt.delta_probe, sc.variant);
                row.T_sq = pr.T_sq;
                row.phi_t = pr.phi_t;
                row.c_minus = pr.c_minus;
            }
            if (wants(sc, Observable::tau_g) && !delta_axis) {
                row.tau_g = delay_at(pt.sys, pt.e_l, pt.e_p,
                                     sc.delta0 > 0 ? sc.delta0 : pt.sys.omega_m,
                                     delay_opt);
            }
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    };

#if defined(_OPENMP)
    if (opt.workers > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(opt.workers)
        for (int i = 0; i < n; ++i) eval_point(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) eval_point(i);
    }
#else
    for (int i = 0; i < n; ++i) eval_point(i);
#endif

    // tau_g on a delta axis: differentiate the swept phase curve itself
    if (wants(sc, Observable::tau_g) && delta_axis) {
        bool all_ok = true;
        for (const auto& row : result.rows) all_ok = all_ok && !row.failed;
        if (all_ok) {
            std::vector<double> phi(n);
            for (int i = 0; i < n; ++i) phi[i] = result.rows[i].phi_t;
            try {
                const auto curve = dispersion_curve(axis_internal, phi, true);
                for (int i = 0; i < n; ++i) result.rows[i].tau_g = curve.tau_g[i];
            } catch (const std::exception& e) {
                for (auto& row : result.rows) {
                    row.failed = true;
                    row.error = e.what();
                }
            }
        }
    }

    for (const auto& row : result.rows)
        if (row.failed) ++result.failed_points;
    if (result.failed_points == n)
        throw scenario_error("scenario '" + sc.name + "': all points failed (" +
                             result.rows.front().error + ")");
    return result;
}

// ---------------------------------------------------------------------------
// flat key-value config

namespace {

const std::set<std::string> known_keys = {
    "name", "axis", "axis_min_hz", "axis_max_hz", "axis_min_w", "axis_max_w",
    "axis_count", "outputs", "variant",
    "omega_m_hz", "gamma_m_hz", "kappa_hz", "delta_c_hz", "g0_hz", "g_ac_hz",
    "gamma_a_hz", "delta_a_hz", "sigma_z_ss", "lambda_l",
    "E_l_hz", "pump_power_w", "E_p_hz", "probe_ratio", "delta_hz"};

// frequency-suffix stems, for targeted suffix diagnostics
const std::set<std::string> frequency_stems = {
    "omega_m", "gamma_m", "kappa", "delta_c", "g0", "g_ac",
    "gamma_a", "delta_a", "E_l", "E_p", "delta",
    "axis_min", "axis_max"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw config_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': cannot parse number '" + value +
                           "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw config_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': cannot parse integer '" + value +
                           "'");
    }
}

} // namespace

Scenario load_config(const std::string& path_or_text) {
    std::string text;
    std::error_code probe_ec;
    const bool is_file =
        path_or_text.find('\n') == std::string::npos &&
        std::filesystem::exists(std::filesystem::path(path_or_text), probe_ec);
    if (is_file) {
        std::ifstream f(path_or_text);
        if (!f) throw config_error("cannot read config file " + path_or_text);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        text = path_or_text;
        if (text.find('=') == std::string::npos)
            throw config_error("config '" + path_or_text +
                               "' is neither a readable file nor config text");
    }

    std::map<std::string, std::string> kv;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("malformed config line '" + line +
                               "' (expected key = value)");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys.count(key)) {
            if (frequency_stems.count(key))
                throw config_error("key '" + key +
                                   "' is missing its unit suffix: use '" + key +
                                   "_hz'");
            throw config_error("unknown key '" + key + "'");
        }
        if (kv.count(key))
            throw config_error("duplicate key '" + key + "'");
        kv[key] = value;
    }

    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw config_error("missing required key '" + key + "'");
        return it->second;
    };
    auto freq = [&](const std::string& key) {
        return cyclic_to_angular(parse_double(key, need(key)));
    };

    Scenario s;
    s.name = need("name");
    s.sys.omega_m = freq("omega_m_hz");
    s.sys.gamma_m = freq("gamma_m_hz");
    s.sys.kappa = freq("kappa_hz");
    s.sys.delta_c = freq("delta_c_hz");
    s.sys.g0 = freq("g0_hz");
    s.sys.g_ac = freq("g_ac_hz");
    s.sys.gamma_a = freq("gamma_a_hz");
    s.sys.delta_a = freq("delta_a_hz");
    if (kv.count("sigma_z_ss"))
        s.sys.sigma_z_ss = parse_double("sigma_z_ss", kv["sigma_z_ss"]);
    if (kv.count("lambda_l"))
        s.sys.lambda_l = parse_double("lambda_l", kv["lambda_l"]);

    s.axis.quantity = axis_from_name(need("axis"));
    s.axis.count = parse_int("axis_count", need("axis_count"));
    if (s.axis.quantity == AxisQuantity::pump_power) {
        s.axis.min = parse_double("axis_min_w", need("axis_min_w"));
        s.axis.max = parse_double("axis_max_w", need("axis_max_w"));
        if (kv.count("axis_min_hz") || kv.count("axis_max_hz"))
            throw config_error("pump-power axis takes axis_min_w/axis_max_w, "
                               "not _hz keys");
    } else {
        s.axis.min = cyclic_to_angular(parse_double("axis_min_hz", need("axis_min_hz")));
        s.axis.max = cyclic_to_angular(parse_double("axis_max_hz", need("axis_max_hz")));
        if (kv.count("axis_min_w") || kv.count("axis_max_w"))
            throw config_error("frequency axis takes axis_min_hz/axis_max_hz, "
                               "not _w keys");
    }

    const bool has_el = kv.count("E_l_hz"), has_pw = kv.count("pump_power_w");
    if (s.axis.quantity == AxisQuantity::pump_power) {
        if (has_el || has_pw)
            throw config_error(
                "pump-power axis scenarios must not fix E_l_hz/pump_power_w");
    } else if (has_el == has_pw) {
        throw config_error(
            "exactly one of E_l_hz or pump_power_w must be given");
    } else if (has_el) {
        s.e_l = cyclic_to_angular(parse_double("E_l_hz", kv["E_l_hz"]));
    } else {
        s.drive_is_power = true;
        s.pump_power_w = parse_double("pump_power_w", kv["pump_power_w"]);
    }

    if (kv.count("E_p_hz") && kv.count("probe_ratio"))
        throw config_error("give either E_p_hz or probe_ratio, not both");
    if (kv.count("E_p_hz")) {
        s.probe_is_abs = true;
        s.e_p_abs = cyclic_to_angular(parse_double("E_p_hz", kv["E_p_hz"]));
    } else if (kv.count("probe_ratio")) {
        s.probe_ratio = parse_double("probe_ratio", kv["probe_ratio"]);
    }

    if (kv.count("delta_hz"))
        s.delta0 = cyclic_to_angular(parse_double("delta_hz", kv["delta_hz"]));

    {
        std::istringstream os(need("outputs"));
        std::string item;
        while (std::getline(os, item, ',')) {
            item = trim(item);
            if (!item.empty()) s.outputs.push_back(observable_from_name(item));
        }
        if (s.outputs.empty()) throw config_error("outputs list is empty");
    }
    if (kv.count("variant")) s.variant = variant_from_name(kv["variant"]);

    const ValidationReport r = validate_scenario(s);
    if (!r.passed) {
        std::string msg = "config validation failed:";
        for (const auto& v : r.violations) msg += " " + v + ";";
        throw config_error(msg);
    }
    return s;
}

std::string serialize(const Scenario& s) {
    std::ostringstream out;
    out << "name = " << s.name << "\n";
    out << "axis = " << axis_name(s.axis.quantity) << "\n";
    if (s.axis.quantity == AxisQuantity::pump_power) {
        out << "axis_min_w = " << format_g17(s.axis.min) << "\n";
        out << "axis_max_w = " << format_g17(s.axis.max) << "\n";
    } else {
        out << "axis_min_hz = " << format_g17(angular_to_cyclic(s.axis.min)) << "\n";
        out << "axis_max_hz = " << format_g17(angular_to_cyclic(s.axis.max)) << "\n";
    }
    out << "axis_count = " << s.axis.count << "\n";
    out << "outputs = ";
    for (std::size_t i = 0; i < s.outputs.size(); ++i)
        out << (i ? "," : "") << observable_name(s.outputs[i]);
    out << "\n";
    out << "variant = " << variant_name(s.variant) << "\n";
    out << "omega_m_hz = " << format_g17(angular_to_cyclic(s.sys.omega_m)) << "\n";
    out << "gamma_m_hz = " << format_g17(angular_to_cyclic(s.sys.gamma_m)) << "\n";
    out << "kappa_hz = " << format_g17(angular_to_cyclic(s.sys.kappa)) << "\n";
    out << "delta_c_hz = " << format_g17(angular_to_cyclic(s.sys.delta_c)) << "\n";
    out << "g0_hz = " << format_g17(angular_to_cyclic(s.sys.g0)) << "\n";
    out << "g_ac_hz = " << format_g17(angular_to_cyclic(s.sys.g_ac)) << "\n";
    out << "gamma_a_hz = " << format_g17(angular_to_cyclic(s.sys.gamma_a)) << "\n";
    out << "delta_a_hz = " << format_g17(angular_to_cyclic(s.sys.delta_a)) << "\n";
    out << "sigma_z_ss = " << format_g17(s.sys.sigma_z_ss) << "\n";
    out << "lambda_l = " << format_g17(s.sys.lambda_l) << "\n";
    if (s.axis.quantity != AxisQuantity::pump_power) {
        if (s.drive_is_power)
            out << "pump_power_w = " << format_g17(s.pump_power_w) << "\n";
        else
            out << "E_l_hz = " << format_g17(angular_to_cyclic(s.e_l)) << "\n";
    }
    if (s.probe_is_abs)
        out << "E_p_hz = " << format_g17(angular_to_cyclic(s.e_p_abs)) << "\n";
    else
        out << "probe_ratio = " << format_g17(s.probe_ratio) << "\n";
    if (s.delta0 > 0)
        out << "delta_hz = " << format_g17(angular_to_cyclic(s.delta0)) << "\n";
    return out.str();
}

} // namespace omitsim
