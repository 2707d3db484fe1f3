#include <map>
#include <string>
#include <vector>

#include "omitsim/errors.hpp"
#include "omitsim/scenario.hpp"
#include "omitsim/units.hpp"

namespace omitsim {

namespace {

SystemParams base_system() {
    SystemParams p{};
    p.omega_m = cyclic_to_angular(10e6);
    p.gamma_m = cyclic_to_angular(140.0);
    p.kappa = cyclic_to_angular(215e3);
    p.delta_c = cyclic_to_angular(10e6);
    p.g0 = 0.0;
    p.g_ac = 0.0;
    p.gamma_a = cyclic_to_angular(200e3);
    p.delta_a = cyclic_to_angular(10e6);
    p.sigma_z_ss = 1.0;
    p.lambda_l = 1064e-9;
    return p;
}

// probe-detuning spectrum scenario, drive given as a rate
Scenario spectrum_scenario(const std::string& name, double g0_hz, double gac_hz,
                           double delta_a_sign) {
    Scenario s;
    s.name = name;
    s.sys = base_system();
    s.sys.kappa = cyclic_to_angular(1e6); // omega_m / 10
    s.sys.g0 = cyclic_to_angular(g0_hz);
    s.sys.g_ac = cyclic_to_angular(gac_hz);
    s.sys.delta_a = delta_a_sign * cyclic_to_angular(10e6);
    s.e_l = cyclic_to_angular(2e6);
    s.probe_ratio = 1e-4;
    s.axis = {AxisQuantity::delta, cyclic_to_angular(5e6),
              cyclic_to_angular(15e6), 601};
    s.outputs = {Observable::T_sq, Observable::phi};
    return s;
}

// pump-power delay scenario evaluated at delta = omega_m
Scenario power_delay_scenario(const std::string& name, double kappa_hz,
                              double gac_hz, double delta_a_sign) {
    Scenario s;
    s.name = name;
    s.sys = base_system();
    s.sys.kappa = cyclic_to_angular(kappa_hz);
    s.sys.g0 = cyclic_to_angular(0.25); // power-preset coupling, see README
    s.sys.g_ac = cyclic_to_angular(gac_hz);
    s.sys.delta_a = delta_a_sign * cyclic_to_angular(10e6);
    s.probe_ratio = 1e-4;
    s.delta0 = s.sys.omega_m;
    s.axis = {AxisQuantity::pump_power, 0.1e-6, 20e-6, 40};
    s.outputs = {Observable::tau_g};
    return s;
}

// oracle validation preset: relaxed gamma_m, probe grid around omega_m
Scenario oracle_scenario(const std::string& name, double gamma_m_hz,
                         double gac_hz, double delta_a_sign) {
    Scenario s;
    s.name = name;
    s.sys = base_system();
    s.sys.gamma_m = cyclic_to_angular(gamma_m_hz);
    s.sys.g0 = cyclic_to_angular(1.2e6);
    s.sys.g_ac = cyclic_to_angular(gac_hz);
    s.sys.delta_a = delta_a_sign * cyclic_to_angular(10e6);
    s.e_l = cyclic_to_angular(2e6);
    s.probe_ratio = 1e-3;
    s.axis = {AxisQuantity::delta, cyclic_to_angular(8e6),
              cyclic_to_angular(12e6), 21};
    s.outputs = {Observable::c_minus, Observable::T_sq};
    return s;
}

std::map<std::string, std::vector<Scenario>> make_presets() {
    std::map<std::string, std::vector<Scenario>> m;
    m["fig2a"] = {spectrum_scenario("fig2a", 0.0, 0.0, +1)};
    m["fig2b"] = {spectrum_scenario("fig2b", 0.5e6, 0.0, +1)};
    m["fig2c"] = {spectrum_scenario("fig2c", 0.8e6, 0.0, +1)};
    m["fig2d"] = {spectrum_scenario("fig2d", 1.2e6, 0.0, +1)};
    m["fig4a"] = {spectrum_scenario("fig4a_gac1p2", 1.2e6, 1.2e6, +1),
                  spectrum_scenario("fig4a_gac1p4", 1.2e6, 1.4e6, +1),
                  spectrum_scenario("fig4a_gac1p6", 1.2e6, 1.6e6, +1)};
    m["fig5"] = {power_delay_scenario("fig5_gac4", 1e6, 4e6, +1),
                 power_delay_scenario("fig5_gac8", 1e6, 8e6, +1)};
    m["fig7"] = {power_delay_scenario("fig7_kpi", 107.5e3, 1.6e6, -1),
                 power_delay_scenario("fig7_k2pi", 215e3, 1.6e6, -1),
                 power_delay_scenario("fig7_k3pi", 322.5e3, 1.6e6, -1)};
    m["oracle-validation"] = {
        oracle_scenario("orc_gm10k_atomoff", 10e3, 0.0, +1),
        oracle_scenario("orc_gm50k_atomoff", 50e3, 0.0, -1),
        oracle_scenario("orc_gm10k_gac1p2", 10e3, 1.2e6, -1),
        oracle_scenario("orc_gm50k_gac1p2", 50e3, 1.2e6, -1),
        oracle_scenario("orc_gm10k_gac4", 10e3, 4e6, -1),
        oracle_scenario("orc_gm50k_gac4", 50e3, 4e6, -1)};
    return m;
}

} // namespace

const std::map<std::string, std::vector<Scenario>>& builtin_presets() {
    static const auto presets = make_presets();
    return presets;
}

std::vector<Scenario> preset(const std::string& name) {
    const auto& all = builtin_presets();
    if (auto it = all.find(name); it != all.end()) return it->second;
    for (const auto& [family, members] : all)
        for (const auto& s : members)
            if (s.name == name) return {s};
    throw config_error("unknown preset '" + name + "'");
}

} // namespace omitsim
