#include "omitsim/units.hpp"

#include <cmath>

#include "omitsim/errors.hpp"

namespace omitsim {

double cyclic_to_angular(double f_hz) { return two_pi * f_hz; }

double angular_to_cyclic(double omega) { return omega / two_pi; }

double power_to_amplitude(double power_w, double lambda_m, double kappa) {
    if (lambda_m <= 0.0)
        throw domain_error("power_to_amplitude: wavelength must be positive");
    if (power_w < 0.0)
        throw domain_error("power_to_amplitude: power must be nonnegative");
    const double omega_l = two_pi * speed_of_light / lambda_m;
    return std::sqrt(2.0 * kappa * power_w / (hbar * omega_l));
}

double amplitude_to_power(double amplitude, double lambda_m, double kappa) {
    if (lambda_m <= 0.0)
        throw domain_error("amplitude_to_power: wavelength must be positive");
    const double omega_l = two_pi * speed_of_light / lambda_m;
    return amplitude * amplitude * hbar * omega_l / (2.0 * kappa);
}

} // namespace omitsim
