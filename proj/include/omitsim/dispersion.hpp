#pragma once
#include <span>
#include <vector>

#include "omitsim/params.hpp"
#include "omitsim/response.hpp"

namespace omitsim {

struct DispersionCurve {
    std::vector<double> delta_grid;     // strictly increasing, rad/s
    std::vector<double> phi_raw;        // wrapped phases, rad
    std::vector<double> phi_unwrapped;  // continuous phases, rad
    std::vector<double> tau_g;          // group delays, s, full grid
    int stencil_order = 2;
    bool richardson = false;
};

// out[0] = in[0]; successive points shifted by the 2 pi multiple minimizing
// |increment|. An increment within 1e-6 of pi throws grid_error naming the
// offending index.
std::vector<double> unwrap_phase(std::span<const double> phi_raw);

// d phi / d delta: central differences on the interior, second-order
// one-sided three-point stencils at the ends. With `richardson` set and a
// uniform grid, interior points with a +-2h neighborhood get the step-halved
// Richardson estimate (4 D_h - D_2h)/3. Needs at least 3 points.
std::vector<double> group_delay(std::span<const double> delta_grid,
                                std::span<const double> phi_unwrapped,
                                bool richardson = false);

DispersionCurve dispersion_curve(std::vector<double> delta_grid,
                                 std::vector<double> phi_raw,
                                 bool richardson = false);

struct DelayOptions {
    double rel_tol = 1e-3;        // agreement between successive estimates
    int max_halvings = 10;
    double initial_half_width = 0; // 0 -> omega_m / 1e4
    Variant variant = Variant::oracle_consistent;
};

// Group delay at a single detuning via a 5-point uniform micro-grid centered
// at delta0, half-width halved adaptively until two successive
// Richardson-refined central estimates agree to rel_tol. Throws
// convergence_error (carrying the last two estimates) when the halving budget
// is exhausted.
double delay_at(const SystemParams& p, double e_l, double e_p, double delta0,
                const DelayOptions& opt = {});

} // namespace omitsim
