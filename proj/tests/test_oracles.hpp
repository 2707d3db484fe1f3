// Test-only reference implementations, kept independent of the library's
// solution paths.
#pragma once
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "omitsim/params.hpp"
#include "omitsim/steady_state.hpp"

namespace testoracle {

// Brute-force steady-state photon number: sign-change bracketing on a dense
// grid over [0, n_hi], refined by bisection to 1e-12 relative. Independent of
// the cubic-solver path.
inline double brute_force_ns(const omitsim::SystemParams& p, double e_l,
                             std::size_t grid_points = 1000000) {
    if (e_l == 0.0) return 0.0;
    const std::complex<double> at = omitsim::atomic_pump_term(p);
    const double a = p.kappa - at.real();
    const double d0 = p.delta_c - at.imag();
    const double beta = p.g0 * p.g0 / p.omega_m;
    const double el2 = e_l * e_l;
    auto f = [&](double n) {
        const double u = d0 - beta * n;
        return n * (a * a + u * u) - el2;
    };
    double hi = (e_l / p.kappa) * (e_l / p.kappa);
    int guard = 0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 2000) throw std::runtime_error("no upper bracket");
    }
    double lo_b = 0.0, hi_b = hi;
    bool found = false;
    double prev_x = 0.0, prev_f = f(0.0);
    for (std::size_t i = 1; i <= grid_points; ++i) {
        const double x = hi * double(i) / double(grid_points);
        const double fx = f(x);
        if (prev_f <= 0.0 && fx >= 0.0) {
            lo_b = prev_x;
            hi_b = x;
            found = true;
            break;
        }
        prev_x = x;
        prev_f = fx;
    }
    if (!found) throw std::runtime_error("no sign change on scan grid");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo_b + hi_b);
        if (hi_b - lo_b <= 1e-12 * std::max(mid, 1e-300)) break;
        if (f(lo_b) * f(mid) <= 0.0)
            hi_b = mid;
        else
            lo_b = mid;
    }
    return 0.5 * (lo_b + hi_b);
}

// Companion-matrix cubic roots (Eigen eigensolver), the second route for the
// cubic-solver property test.
inline std::vector<std::complex<double>> companion_roots(double c3, double c2,
                                                         double c1, double c0) {
    std::vector<std::complex<double>> out;
    if (c3 == 0.0) {
        if (c2 == 0.0) {
            if (c1 != 0.0) out.push_back(-c0 / c1);
            return out;
        }
        const std::complex<double> disc =
            std::sqrt(std::complex<double>(c1 * c1 - 4.0 * c2 * c0, 0.0));
        out.push_back((-c1 + disc) / (2.0 * c2));
        out.push_back((-c1 - disc) / (2.0 * c2));
        return out;
    }
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(1, 0) = 1.0;
    m(2, 1) = 1.0;
    m(0, 2) = -c0 / c3;
    m(1, 2) = -c1 / c3;
    m(2, 2) = -c2 / c3;
    Eigen::EigenSolver<Eigen::Matrix3d> es(m);
    for (int i = 0; i < 3; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

} // namespace testoracle
