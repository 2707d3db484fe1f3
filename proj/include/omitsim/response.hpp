#pragma once
#include <complex>
#include <span>
#include <vector>

#include "omitsim/params.hpp"
#include "omitsim/steady_state.hpp"

namespace omitsim {

// Two algebraic routes to the probe sideband amplitude. "oracle_consistent"
// solves the linearized 2x2 sideband system directly and is validated against
// the time-domain integrator; "paper_literal" evaluates the equivalent
// published closed-form expression. See docs/derivation.md.
enum class Variant { oracle_consistent, paper_literal };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name); // throws config_error

struct ProbeResponse {
    double delta = 0.0;             // probe detuning, rad/s
    std::complex<double> c_minus;   // sideband amplitude at e^{-i delta t}
    std::complex<double> c_plus;    // sideband amplitude at e^{+i delta t} (diagnostic)
    std::complex<double> T;         // probe transmission, T = 1 - 2 kappa c_-/E_p
    double T_sq = 0.0;              // |T|^2
    double phi_t = 0.0;             // arg(T), rad in (-pi, pi]
};

// chi(delta) = omega_m / (omega_m^2 - delta^2 - i gamma_m delta)
std::complex<double> mechanical_susceptibility(const SystemParams& p, double delta);

// First-order sideband response around `steady`. Throws contract_error if the
// steady state was solved for a different parameter set.
ProbeResponse probe_response(const SystemParams& p, const SteadyState& steady,
                             double e_p, double delta,
                             Variant v = Variant::oracle_consistent);

enum class Exec { serial, parallel };

// One ProbeResponse per grid point; the steady state is solved once and
// reused. The parallel path fans grid points out to OpenMP workers and is
// bit-identical to the serial reference. delta_grid must be strictly
// increasing. workers = 0 means the OpenMP default.
std::vector<ProbeResponse> transmission_spectrum(
    const SystemParams& p, double e_l, double e_p,
    std::span<const double> delta_grid,
    Variant v = Variant::oracle_consistent,
    Exec exec = Exec::parallel, int workers = 0);

} // namespace omitsim
