#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace omitsim {

// Physical parameters of the hybrid cavity (movable mirror + two-level atom).
// Mechanical quadratures are dimensionless ([q,p]-normalized oscillator), so a
// single coupling rate g0 replaces the dimensioned mirror coupling; see
// docs/derivation.md for the convention.
struct SystemParams {
    double omega_m;           // mechanical angular frequency, rad/s
    double gamma_m;           // mechanical damping rate, rad/s
    double kappa;             // cavity amplitude decay rate, rad/s
    double delta_c;           // cavity-pump detuning omega_c - omega_l, rad/s
    double g0;                // single-photon optomechanical coupling, rad/s
    double g_ac;              // atom-field (Jaynes-Cummings) coupling, rad/s
    double gamma_a;           // atomic decay rate, rad/s
    double delta_a;           // atom-pump detuning omega_a - omega_l, rad/s
    double sigma_z_ss = 1.0;  // frozen atomic inversion <sigma_z>, in [-1, 1]
    double lambda_l = 1064e-9; // pump wavelength, m (power conversion only)
};

struct DriveParams {
    double e_l;   // pump amplitude, 1/s, >= 0
    double e_p;   // probe amplitude, 1/s, >= 0
    double delta; // probe-pump detuning omega_p - omega_l, rad/s
};

struct ValidationReport {
    bool passed = true;
    std::vector<std::string> violations;
    bool sideband_resolved = false; // omega_m > kappa; informational only
};

ValidationReport validate(const SystemParams& p);

// Checks e_l, e_p >= 0 and (unless enforce_weak_probe is cleared) the
// linearization assumption e_p <= 0.1 e_l.
ValidationReport validate_drive(const SystemParams& p, const DriveParams& d,
                                bool enforce_weak_probe = true);

// Fingerprint binding a SteadyState to the parameter set it was solved for.
std::uint64_t params_hash(const SystemParams& p, double e_l);

} // namespace omitsim
