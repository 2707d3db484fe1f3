#include "omitsim/params.hpp"

#include <cmath>
#include <cstring>

namespace omitsim {

ValidationReport validate(const SystemParams& p) {
    ValidationReport r;
    auto fail = [&r](const std::string& msg) {
        r.passed = false;
        r.violations.push_back(msg);
    };
    if (!(p.omega_m > 0.0)) fail("omega_m must be positive");
    if (!(p.kappa > 0.0)) fail("kappa must be positive");
    if (!(p.gamma_m >= 0.0)) fail("gamma_m must be nonnegative");
    if (!(p.gamma_a >= 0.0)) fail("gamma_a must be nonnegative");
    if (!(p.lambda_l > 0.0)) fail("lambda_l must be positive");
    if (!(p.sigma_z_ss >= -1.0 && p.sigma_z_ss <= 1.0))
        fail("sigma_z_ss must lie in [-1, +1]");
    for (double v : {p.omega_m, p.gamma_m, p.kappa, p.delta_c, p.g0, p.g_ac,
                     p.gamma_a, p.delta_a, p.sigma_z_ss, p.lambda_l})
        if (!std::isfinite(v)) {
            fail("all parameters must be finite");
            break;
        }
    r.sideband_resolved = p.omega_m > p.kappa;
    return r;
}

ValidationReport validate_drive(const SystemParams& p, const DriveParams& d,
                                bool enforce_weak_probe) {
    ValidationReport r = validate(p);
    auto fail = [&r](const std::string& msg) {
        r.passed = false;
        r.violations.push_back(msg);
    };
    if (!(d.e_l >= 0.0)) fail("E_l must be nonnegative");
    if (!(d.e_p >= 0.0)) fail("E_p must be nonnegative");
    if (enforce_weak_probe && d.e_p > 0.1 * d.e_l)
        fail("E_p must satisfy E_p <= 0.1 E_l (weak-probe linearization)");
    return r;
}

std::uint64_t params_hash(const SystemParams& p, double e_l) {
    const double fields[] = {p.omega_m, p.gamma_m, p.kappa,   p.delta_c,
                             p.g0,      p.g_ac,    p.gamma_a, p.delta_a,
                             p.sigma_z_ss, p.lambda_l, e_l};
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (double f : fields) {
        std::uint64_t bits;
        std::memcpy(&bits, &f, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

} // namespace omitsim
