#pragma once
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "omitsim/params.hpp"

namespace omitsim {

// Mean-field state (q, p dimensionless; c, sigma complex amplitudes).
struct MeanFieldState {
    double q = 0.0;
    double p = 0.0;
    std::complex<double> c{0.0, 0.0};
    std::complex<double> sigma{0.0, 0.0};
    double t = 0.0;
};

struct DriveTones {
    double e_l = 0.0;
    double e_p = 0.0;
    double delta = 0.0; // probe-pump detuning, rad/s
};

// Right-hand side of the mean-field equations:
//   q' = omega_m p
//   p' = -omega_m q - gamma_m p + g0 |c|^2
//   c' = -(kappa + i delta_c) c + i g0 c q - i g_ac sigma + E_l + E_p e^{-i delta t}
//   sigma' = -(gamma_a + i delta_a) sigma + i g_ac c <sigma_z>
MeanFieldState derivative(const MeanFieldState& s, const SystemParams& p,
                          const DriveTones& d, double t);

struct IntegrationControls {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double dt_out = 0.0;            // uniform output spacing; 0 -> derived from delta
    MeanFieldState initial{};       // state at t = 0
    double divergence_factor = 1e12;
};

struct TrajectoryMeta {
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
    std::size_t rhs_evals = 0;
    int method_order = 5;           // Dormand-Prince 5(4)
    double dt_out = 0.0;
};

struct Trajectory {
    std::vector<double> t; // uniform, strictly increasing
    std::vector<double> q;
    std::vector<double> p;
    std::vector<std::complex<double>> c;
    std::vector<std::complex<double>> sigma;
    TrajectoryMeta meta;
};

// Adaptive explicit Runge-Kutta integration with dense uniform output;
// deterministic given identical controls. Throws instability_error (with the
// blow-up time) when the divergence detector trips and stiffness_error on
// step-size underflow.
Trajectory integrate(const SystemParams& p, const DriveTones& d, double t_end,
                     const IntegrationControls& controls = {});

// Amplitudes of the ansatz h_s + h_- e^{-i delta t} + h_+ e^{+i delta t}.
struct ToneEstimate {
    std::complex<double> h_s;
    std::complex<double> h_minus;
    std::complex<double> h_plus;
    double residual = 0.0; // fraction of AC power outside the two sidebands
};

struct DemodResult {
    ToneEstimate c;
    ToneEstimate q;
    ToneEstimate sigma;
    int periods = 0;
};

// Projects the trajectory tail onto the three tones over an integer number of
// beat periods (trapezoid rule). window_periods >= 10; the window must fit in
// the trajectory and cover an integer period count within 1e-6 fractional.
DemodResult demodulate(const Trajectory& traj, double delta, int window_periods);

// CSV columns: t,q,p,re_c,im_c,re_sigma,im_sigma
void dump_trajectory_csv(const Trajectory& traj, const std::string& path);

} // namespace omitsim
