#include "omitsim/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace omitsim {

namespace {

std::complex<double> polish(std::complex<double> x, double c3, double c2,
                            double c1, double c0) {
    // one Newton step on the original polynomial
    const std::complex<double> p = ((c3 * x + c2) * x + c1) * x + c0;
    const std::complex<double> dp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
    if (std::abs(dp) > 0.0) x -= p / dp;
    return x;
}

} // namespace

CubicRoots cubic_roots(double c3, double c2, double c1, double c0) {
    CubicRoots out;
    const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1),
                                   std::abs(c0)});
    if (scale == 0.0) return out; // identically zero polynomial: no roots reported
    const double a3 = c3 / scale, a2 = c2 / scale, a1 = c1 / scale,
                 a0 = c0 / scale;

    if (a3 == 0.0) {
        if (a2 == 0.0) {
            if (a1 == 0.0) return out;
            out.roots[0] = -a0 / a1;
            out.count = 1;
        } else {
            const double disc = a1 * a1 - 4.0 * a2 * a0;
            if (disc >= 0.0) {
                const double s = std::sqrt(disc);
                const double q = -0.5 * (a1 + std::copysign(s, a1));
                out.roots[0] = q / a2;
                out.roots[1] = (q != 0.0) ? a0 / q : 0.0;
            } else {
                const double re = -a1 / (2.0 * a2);
                const double im = std::sqrt(-disc) / (2.0 * a2);
                out.roots[0] = {re, im};
                out.roots[1] = {re, -im};
            }
            out.count = 2;
        }
        for (int i = 0; i < out.count; ++i)
            out.roots[i] = polish(out.roots[i], c3, c2, c1, c0);
        return out;
    }

    // depressed cubic t^3 + p t + q, x = t - b/3
    const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double shift = -b / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    if (disc <= 0.0) {
        // three real roots (trigonometric branch)
        const double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
        double arg = (m == 0.0) ? 0.0 : 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
        for (int k = 0; k < 3; ++k)
            out.roots[k] = m * std::cos(theta - third_turn * k) + shift;
    } else {
        const double s = std::sqrt(disc);
        const double u = std::cbrt(-q / 2.0 + s);
        const double v = std::cbrt(-q / 2.0 - s);
        const double t1 = u + v;
        out.roots[0] = t1 + shift;
        const double re = -0.5 * t1 + shift;
        const double im = 0.5 * std::sqrt(3.0) * (u - v);
        out.roots[1] = {re, im};
        out.roots[2] = {re, -im};
    }
    out.count = 3;
    for (int i = 0; i < 3; ++i)
        out.roots[i] = polish(out.roots[i], c3, c2, c1, c0);
    return out;
}

} // namespace omitsim
