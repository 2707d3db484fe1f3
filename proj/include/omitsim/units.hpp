#pragma once
#include <numbers>

namespace omitsim {

inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double speed_of_light = 299792458.0;  // m / s
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// All internal math runs in angular units (rad/s). File and CLI inputs use the
// X/2pi convention (plain Hz) and convert at the boundary with these helpers.
double cyclic_to_angular(double f_hz);
double angular_to_cyclic(double omega);

// |E_l| = sqrt(2 kappa P / (hbar omega_l)), omega_l = 2 pi c / lambda.
// power in W, lambda in m, kappa in rad/s; returns the drive amplitude in 1/s.
double power_to_amplitude(double power_w, double lambda_m, double kappa);
double amplitude_to_power(double amplitude, double lambda_m, double kappa);

} // namespace omitsim
