#include "omitsim/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "omitsim/cubic.hpp"
#include "omitsim/errors.hpp"

namespace omitsim {

std::complex<double> atomic_pump_term(const SystemParams& p) {
    if (p.g_ac == 0.0) return {0.0, 0.0};
    if (p.gamma_a == 0.0 && p.delta_a == 0.0)
        throw domain_error(
            "atomic term diverges: gamma_a = 0 and delta_a = 0 with g_ac != 0");
    return p.g_ac * p.g_ac * p.sigma_z_ss /
           std::complex<double>(p.gamma_a, p.delta_a);
}

SteadyState solve_steady_state(const SystemParams& p, double e_l) {
    if (e_l < 0.0) throw domain_error("solve_steady_state: E_l must be >= 0");
    const std::complex<double> at = atomic_pump_term(p);

    SteadyState st;
    st.e_l = e_l;
    st.hash = params_hash(p, e_l);
    if (e_l == 0.0) {
        st.c_s = {0.0, 0.0};
        st.n_s = 0.0;
        st.delta_tilde = p.delta_c;
        st.q_s = 0.0;
        st.sigma_s = {0.0, 0.0};
        st.branch_count = 1;
        return st;
    }

    const double a = p.kappa - at.real();       // effective loss
    const double d0 = p.delta_c - at.imag();    // effective detuning at n = 0
    const double beta = p.g0 * p.g0 / p.omega_m;
    const double el2 = e_l * e_l;

    // f(n) = n [a^2 + (d0 - beta n)^2] - E_l^2
    auto f = [&](double n) {
        const double u = d0 - beta * n;
        return n * (a * a + u * u) - el2;
    };
    auto fprime = [&](double n) {
        const double u = d0 - beta * n;
        return a * a + u * u - 2.0 * beta * n * u;
    };

    std::vector<double> admissible;
    if (beta == 0.0) {
        const double denom = a * a + d0 * d0;
        if (denom <= 0.0)
            throw solver_error("solve_steady_state: vanishing pump denominator");
        admissible.push_back(el2 / denom);
    } else {
        // condition the cubic by rescaling n with a root-magnitude estimate
        const double n_ref = std::max({std::cbrt(el2 / (beta * beta)),
                                       el2 / (a * a + d0 * d0 + beta * beta),
                                       std::abs(d0) / beta, 1.0});
        const double k3 = beta * beta * n_ref * n_ref * n_ref;
        const double k2 = -2.0 * d0 * beta * n_ref * n_ref;
        const double k1 = (a * a + d0 * d0) * n_ref;
        const double k0 = -el2;
        const CubicRoots r = cubic_roots(k3, k2, k1, k0);
        for (int i = 0; i < r.count; ++i) {
            const auto root = r.roots[i];
            const double mag = std::abs(root);
            if (std::abs(root.imag()) > 1e-9 * std::max(1.0, mag)) continue;
            double n = root.real() * n_ref;
            if (n < -1e-12 * n_ref) continue;
            n = std::max(n, 0.0);
            for (int it = 0; it < 4; ++it) { // polish on the physical residual
                const double fp = fprime(n);
                if (fp == 0.0) break;
                n -= f(n) / fp;
            }
            if (n >= 0.0 && std::isfinite(n)) admissible.push_back(n);
        }
        std::sort(admissible.begin(), admissible.end());
        // collapse numerically identical branches
        admissible.erase(
            std::unique(admissible.begin(), admissible.end(),
                        [](double x, double y) {
                            return std::abs(x - y) <= 1e-9 * std::max(1.0, std::max(x, y));
                        }),
            admissible.end());
    }
    if (admissible.empty())
        throw solver_error("solve_steady_state: no nonnegative real root");

    const double n_s = admissible.front(); // branch connected to n = 0
    const std::complex<double> D =
        std::complex<double>(p.kappa, p.delta_c - beta * n_s) - at;
    st.c_s = e_l / D;
    st.n_s = n_s;
    st.delta_tilde = p.delta_c - beta * n_s;
    st.q_s = p.g0 * n_s / p.omega_m;
    st.sigma_s = (p.g_ac == 0.0)
                     ? std::complex<double>{0.0, 0.0}
                     : std::complex<double>{0.0, 1.0} * p.g_ac * st.c_s *
                           p.sigma_z_ss /
                           std::complex<double>(p.gamma_a, p.delta_a);
    st.branch_count = static_cast<int>(admissible.size());

    // fixed-point residual contract
    const double resid = std::abs(st.c_s * D - e_l);
    if (!(resid < 1e-9 * e_l))
        throw solver_error("solve_steady_state: fixed-point residual exceeds 1e-9 E_l");
    return st;
}

} // namespace omitsim
