#pragma once
#include <complex>
#include <cstdint>

#include "omitsim/params.hpp"

namespace omitsim {

// Self-consistent pump-tone operating point.
struct SteadyState {
    std::complex<double> c_s;     // cavity amplitude at the pump tone
    double n_s = 0.0;             // |c_s|^2, mean photon number
    double delta_tilde = 0.0;     // effective detuning delta_c - g0^2 n_s / omega_m
    double q_s = 0.0;             // static mirror displacement, dimensionless
    std::complex<double> sigma_s; // static atomic coherence
    int branch_count = 1;         // admissible real roots of the cubic
    double e_l = 0.0;
    std::uint64_t hash = 0;       // params_hash(p, e_l)
};

// Solves n |D(n)|^2 = E_l^2 with
//   D(n) = kappa + i(delta_c - g0^2 n / omega_m) - g_ac^2 <sigma_z>/(gamma_a + i delta_a),
// a real cubic in n. With several positive roots (bistability) the lowest
// branch, continuously connected to n = 0, is returned.
SteadyState solve_steady_state(const SystemParams& p, double e_l);

// The atomic term g_ac^2 <sigma_z> / (gamma_a + i delta_a); throws
// domain_error when gamma_a = delta_a = 0 with g_ac != 0.
std::complex<double> atomic_pump_term(const SystemParams& p);

} // namespace omitsim
