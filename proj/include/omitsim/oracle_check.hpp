#pragma once
#include <complex>
#include <string>
#include <vector>

#include "omitsim/oracle.hpp"
#include "omitsim/scenario.hpp"

namespace omitsim {

struct OraclePoint {
    double delta = 0.0;
    std::complex<double> c_formula;  // closed-form c_-
    std::complex<double> c_demod;    // demodulated from the trajectory
    double rel_diff = 0.0;
    double steady_rel_diff = 0.0;    // demodulated h_s vs c_s
};

struct OracleCheckResult {
    std::string scenario;
    std::vector<OraclePoint> points;
    double max_rel_diff = 0.0;
    double max_steady_rel_diff = 0.0;
};

struct OracleCheckOptions {
    double t_end_factor = 20.0;   // t_end = factor / gamma_m
    double window_fraction = 0.25;
    int samples_per_period = 32;
    int max_points = 0;           // 0 -> every grid point of the scenario
    IntegrationControls controls{};
    // optional trajectory dump of the final point
    std::string dump_path;
};

// Integrates the mean-field equations from the pump steady state with the
// probe switched on at t = 0, demodulates the trailing window, and compares
// against the closed-form sideband amplitude at every point of the scenario's
// delta axis. Throws instability_error if the preset is dynamically unstable.
OracleCheckResult oracle_check(const Scenario& s,
                               const OracleCheckOptions& opt = {});

} // namespace omitsim
