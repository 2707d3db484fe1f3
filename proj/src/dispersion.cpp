#include "omitsim/dispersion.hpp"

#include <cmath>
#include <numbers>

#include "omitsim/errors.hpp"
#include "omitsim/units.hpp"

namespace omitsim {

std::vector<double> unwrap_phase(std::span<const double> phi_raw) {
    if (phi_raw.empty())
        throw arity_error("unwrap_phase: input must be nonempty");
    std::vector<double> out(phi_raw.size());
    out[0] = phi_raw[0];
    for (std::size_t k = 1; k < phi_raw.size(); ++k) {
        const double d = phi_raw[k] - phi_raw[k - 1];
        const double adj = d - two_pi * std::round(d / two_pi);
        if (std::abs(adj) >= std::numbers::pi - 1e-6)
            throw grid_error("unwrap_phase: grid too coarse at index " +
                                 std::to_string(k) +
                                 " (increment within 1e-6 of pi)",
                             k);
        out[k] = out[k - 1] + adj;
    }
    return out;
}

namespace {

bool grid_is_uniform(std::span<const double> x) {
    if (x.size() < 3) return true;
    const double h = x[1] - x[0];
    for (std::size_t i = 2; i < x.size(); ++i)
        if (std::abs((x[i] - x[i - 1]) - h) > 1e-9 * std::abs(h)) return false;
    return true;
}

// derivative of the quadratic through (x0,y0),(x1,y1),(x2,y2) at x0
double one_sided(double x0, double y0, double x1, double y1, double x2,
                 double y2) {
    const double h1 = x1 - x0, h2 = x2 - x0;
    return (y1 - y0) * h2 / (h1 * (h2 - h1)) -
           (y2 - y0) * h1 / (h2 * (h2 - h1));
}

} // namespace

std::vector<double> group_delay(std::span<const double> delta_grid,
                                std::span<const double> phi_unwrapped,
                                bool richardson) {
    const std::size_t n = delta_grid.size();
    if (n < 3)
        throw arity_error("group_delay: need at least 3 grid points");
    if (phi_unwrapped.size() != n)
        throw arity_error("group_delay: grid and phase lengths differ");
    for (std::size_t i = 1; i < n; ++i)
        if (!(delta_grid[i] > delta_grid[i - 1]))
            throw domain_error("group_delay: grid must be strictly increasing");

    std::vector<double> tau(n);
    for (std::size_t k = 1; k + 1 < n; ++k)
        tau[k] = (phi_unwrapped[k + 1] - phi_unwrapped[k - 1]) /
                 (delta_grid[k + 1] - delta_grid[k - 1]);
    tau[0] = one_sided(delta_grid[0], phi_unwrapped[0], delta_grid[1],
                       phi_unwrapped[1], delta_grid[2], phi_unwrapped[2]);
    tau[n - 1] = one_sided(delta_grid[n - 1], phi_unwrapped[n - 1],
                           delta_grid[n - 2], phi_unwrapped[n - 2],
                           delta_grid[n - 3], phi_unwrapped[n - 3]);

    if (richardson && n >= 5 && grid_is_uniform(delta_grid)) {
        for (std::size_t k = 2; k + 2 < n; ++k) {
            const double dh = (phi_unwrapped[k + 1] - phi_unwrapped[k - 1]) /
                              (delta_grid[k + 1] - delta_grid[k - 1]);
            const double d2h = (phi_unwrapped[k + 2] - phi_unwrapped[k - 2]) /
                               (delta_grid[k + 2] - delta_grid[k - 2]);
            tau[k] = (4.0 * dh - d2h) / 3.0;
        }
    }
    return tau;
}

DispersionCurve dispersion_curve(std::vector<double> delta_grid,
                                 std::vector<double> phi_raw, bool richardson) {
    DispersionCurve c;
    c.phi_unwrapped = unwrap_phase(phi_raw);
    c.tau_g = group_delay(delta_grid, c.phi_unwrapped, richardson);
    c.delta_grid = std::move(delta_grid);
    c.phi_raw = std::move(phi_raw);
    c.stencil_order = 2;
    c.richardson = richardson;
    return c;
}

double delay_at(const SystemParams& p, double e_l, double e_p, double delta0,
                const DelayOptions& opt) {
    const SteadyState st = solve_steady_state(p, e_l);
    double half_width =
        opt.initial_half_width > 0 ? opt.initial_half_width : p.omega_m / 1e4;

    double last = 0.0, prev = 0.0;
    int have = 0;
    for (int k = 0; k <= opt.max_halvings; ++k) {
        const double h = half_width / 2.0;
        double phi[5];
        for (int j = 0; j < 5; ++j) {
            const double d = delta0 + h * (j - 2);
            phi[j] = probe_response(p, st, e_p, d, opt.variant).phi_t;
        }
        const auto u = unwrap_phase(std::span<const double>(phi, 5));
        const double dh = (u[3] - u[1]) / (2.0 * h);
        const double d2h = (u[4] - u[0]) / (4.0 * h);
        const double tau = (4.0 * dh - d2h) / 3.0; // Richardson-refined center
        prev = last;
        last = tau;
        ++have;
        if (have >= 2 && std::abs(last - prev) <= opt.rel_tol * std::abs(last))
            return last;
        half_width /= 2.0;
    }
    throw convergence_error(
        "delay_at: no convergence after " + std::to_string(opt.max_halvings) +
            " halvings",
        last, prev);
}

} // namespace omitsim
