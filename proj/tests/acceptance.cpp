// Acceptance suite: one check per numbered criterion, each printing a single
// PASS/FAIL line. Usage: acceptance_tests [N|all]
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "omitsim/dispersion.hpp"
#include "omitsim/errors.hpp"
#include "omitsim/oracle_check.hpp"
#include "omitsim/response.hpp"
#include "omitsim/scenario.hpp"
#include "omitsim/steady_state.hpp"
#include "omitsim/units.hpp"
#include "test_oracles.hpp"

using namespace omitsim;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / double(n - 1);
    return v;
}

SystemParams fig2_params(double g0_hz, double gac_hz = 0.0,
                         double da_sign = 1.0) {
    SystemParams p{};
    p.omega_m = cyclic_to_angular(10e6);
    p.gamma_m = cyclic_to_angular(140.0);
    p.kappa = cyclic_to_angular(1e6);
    p.delta_c = p.omega_m;
    p.g0 = cyclic_to_angular(g0_hz);
    p.g_ac = cyclic_to_angular(gac_hz);
    p.gamma_a = cyclic_to_angular(200e3);
    p.delta_a = da_sign * p.omega_m;
    return p;
}

const double EL_FIG2 = cyclic_to_angular(2e6);

// criterion 1: closed form vs time-domain demodulation on the stable
// validation presets
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& fam = preset("oracle-validation");
    double worst = 0.0;
    std::string worst_at;
    int presets_run = 0, points_run = 0;
    for (const auto& s : fam) {
        OracleCheckOptions opt; // full 21-point grid
        const auto r = oracle_check(s, opt);
        ++presets_run;
        points_run += static_cast<int>(r.points.size());
        if (r.max_rel_diff > worst) {
            worst = r.max_rel_diff;
            worst_at = r.scenario;
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%d presets, %d points, worst rel diff %.3e (%s), %.1f s",
                  presets_run, points_run, worst, worst_at.c_str(), elapsed);
    return {presets_run >= 5 && points_run >= 5 * 20 && worst < 1e-3 &&
                elapsed < 600.0,
            buf};
}

Outcome criterion2() {
    const SystemParams p = fig2_params(0.0);
    double worst = 0.0;
    const auto run_grid = [&](const std::vector<double>& grid) {
        const auto spec = transmission_spectrum(p, EL_FIG2, 1e-4 * EL_FIG2, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double ref = std::norm(
                1.0 - 2.0 * p.kappa / cplx(p.kappa, p.delta_c - grid[i]));
            worst = std::max(worst, std::abs(spec[i].T_sq - ref));
        }
    };
    run_grid(linspace(0.5 * p.omega_m, 1.5 * p.omega_m, 601));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    std::vector<double> random_grid(257);
    for (auto& d : random_grid) d = u(rng) * p.omega_m;
    std::sort(random_grid.begin(), random_grid.end());
    random_grid.erase(std::unique(random_grid.begin(), random_grid.end()),
                      random_grid.end());
    run_grid(random_grid);
    char buf[128];
    std::snprintf(buf, sizeof buf, "max | |T|^2 - closed form | = %.3e", worst);
    return {worst < 1e-12, buf};
}

Outcome criterion3() {
    const double g0_list[] = {0.0, 0.5e6, 0.8e6, 1.2e6};
    double t2[4];
    for (int i = 0; i < 4; ++i) {
        const SystemParams p = fig2_params(g0_list[i]);
        const auto st = solve_steady_state(p, EL_FIG2);
        t2[i] = probe_response(p, st, 1e-4 * EL_FIG2, p.omega_m).T_sq;
    }
    const bool increasing = t2[0] < t2[1] && t2[1] < t2[2] && t2[2] < t2[3];
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "|T(w_m)|^2 = {%.6f, %.6f, %.6f, %.6f} across g0/2pi = "
                  "{0, 0.5, 0.8, 1.2} MHz",
                  t2[0], t2[1], t2[2], t2[3]);
    return {increasing, buf};
}

// width of the transparency feature at half depth, on a fine fixed grid
double feature_width(const SystemParams& p, double e_l) {
    const int n = 4001;
    const auto grid = linspace(0.7 * p.omega_m, 1.3 * p.omega_m, n);
    const auto spec = transmission_spectrum(p, e_l, 1e-4 * e_l, grid);
    std::vector<double> t2(n);
    for (int i = 0; i < n; ++i) t2[i] = spec[i].T_sq;

    const int lo = static_cast<int>(n * 0.4), hi = static_cast<int>(n * 0.6);
    int ip = lo;
    for (int i = lo; i < hi; ++i)
        if (t2[i] > t2[ip]) ip = i;
    int il = ip;
    while (il > 0 && t2[il - 1] <= t2[il]) --il;
    int ir = ip;
    while (ir < n - 1 && t2[ir + 1] <= t2[ir]) ++ir;
    const double base = std::max(t2[il], t2[ir]);
    const double half = base + 0.5 * (t2[ip] - base);
    int jl = ip;
    while (jl > il && t2[jl] > half) --jl;
    int jr = ip;
    while (jr < ir && t2[jr] > half) ++jr;
    auto interp = [&](int a, int b) {
        if (t2[a] == t2[b]) return grid[a];
        return grid[a] + (half - t2[a]) * (grid[b] - grid[a]) / (t2[b] - t2[a]);
    };
    return interp(jr, jr - 1) - interp(jl, jl + 1);
}

Outcome criterion4() {
    double w[3];
    const double gac[] = {1.2e6, 1.4e6, 1.6e6};
    for (int i = 0; i < 3; ++i)
        w[i] = feature_width(fig2_params(1.2e6, gac[i], +1.0), EL_FIG2);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "half-depth widths/2pi = {%.4f, %.4f, %.4f} MHz",
                  angular_to_cyclic(w[0]) / 1e6, angular_to_cyclic(w[1]) / 1e6,
                  angular_to_cyclic(w[2]) / 1e6);
    return {w[0] < w[1] && w[1] < w[2], buf};
}

// tau_g(power) for every member scenario of a preset family
std::vector<std::vector<double>> family_delays(const std::string& family) {
    std::vector<std::vector<double>> out;
    for (const auto& s : preset(family)) {
        const auto res = run_scenario(s);
        if (res.failed_points != 0)
            throw scenario_error("delay sweep had failed points: " + s.name);
        std::vector<double> taus;
        for (const auto& row : res.rows) taus.push_back(row.tau_g);
        out.push_back(std::move(taus));
    }
    return out;
}

Outcome criterion5() {
    const auto fig5 = family_delays("fig5");
    const auto fig7 = family_delays("fig7");
    bool fast = true, slow = true;
    for (const auto& taus : fig5)
        for (double t : taus) fast = fast && t < 0.0;
    for (const auto& taus : fig7)
        for (double t : taus) slow = slow && t > 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Delta_a=+w_m all tau<0: %s; Delta_a=-w_m all tau>0: %s",
                  fast ? "yes" : "no", slow ? "yes" : "no");
    return {fast && slow, buf};
}

Outcome criterion6() {
    const auto fig5 = family_delays("fig5"); // [0]=gac4, [1]=gac8
    double max_abs_fast = 0.0;
    for (double t : fig5[1]) max_abs_fast = std::max(max_abs_fast, std::abs(t));
    const auto fig7 = family_delays("fig7");
    double max_slow = 0.0;
    for (const auto& taus : fig7)
        for (double t : taus) max_slow = std::max(max_slow, t);
    const bool fast_band = max_abs_fast >= 2e-9 && max_abs_fast <= 200e-9;
    const bool slow_band = max_slow >= 0.4e-6 && max_slow <= 40e-6;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max|tau| fig5(g_ac=8MHz) = %.3f ns in [2,200]; "
                  "max tau fig7 = %.3f us in [0.4,40]",
                  max_abs_fast * 1e9, max_slow * 1e6);
    return {fast_band && slow_band, buf};
}

Outcome criterion7() {
    // members ordered kpi, k2pi, k3pi
    const auto fig7 = family_delays("fig7");
    double mx[3];
    for (int i = 0; i < 3; ++i)
        mx[i] = *std::max_element(fig7[i].begin(), fig7[i].end());
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max tau {pi, 2pi, 3pi}x215kHz = {%.3f, %.3f, %.3f} us",
                  mx[0] * 1e6, mx[1] * 1e6, mx[2] * 1e6);
    return {mx[0] > mx[1] && mx[1] > mx[2], buf};
}

Outcome criterion8() {
    const double power = 6e-6; // fixed pump power
    double tau[3];
    const double gac[] = {0.0, 4e6, 8e6};
    for (int i = 0; i < 3; ++i) {
        SystemParams p = fig2_params(0.0, gac[i], +1.0);
        p.g0 = cyclic_to_angular(0.25); // power-preset coupling
        const double el = power_to_amplitude(power, p.lambda_l, p.kappa);
        tau[i] = delay_at(p, el, 1e-4 * el, p.omega_m);
    }
    const bool ordered =
        std::abs(tau[2]) > std::abs(tau[1]) && std::abs(tau[1]) > std::abs(tau[0]);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "tau(g_ac=0) = %.3e s, tau(4MHz) = %.3e s, tau(8MHz) = %.3e s; "
                  "need |tau(8)|>|tau(4)|>|tau(0)|",
                  tau[0], tau[1], tau[2]);
    return {ordered, buf};
}

Outcome criterion9() {
    const double wm = cyclic_to_angular(10e6);
    auto max_err = [&](int n) {
        const auto grid = linspace(0.5 * wm, 1.5 * wm, n);
        std::vector<double> phi(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            phi[i] = std::sin(grid[i] / wm);
        const auto tau = group_delay(grid, phi);
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < grid.size(); ++i)
            worst = std::max(worst,
                             std::abs(tau[i] - std::cos(grid[i] / wm) / wm));
        return worst;
    };
    const double r1 = max_err(101) / max_err(201);
    const double r2 = max_err(201) / max_err(401);
    // affine phases are exact
    const auto grid = linspace(0.3 * wm, 2.1 * wm, 57);
    std::vector<double> phi(grid.size());
    const double slope = 7.5e-9;
    for (std::size_t i = 0; i < grid.size(); ++i) phi[i] = slope * grid[i] - 1.1;
    double affine_err = 0.0;
    for (double t : group_delay(grid, phi))
        affine_err = std::max(affine_err, std::abs(t - slope) / slope);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "halving ratios %.2f, %.2f (need [3,5]); affine rel err %.1e",
                  r1, r2, affine_err);
    return {r1 > 3.0 && r1 < 5.0 && r2 > 3.0 && r2 < 5.0 && affine_err < 1e-12,
            buf};
}

Outcome criterion10() {
    std::mt19937_64 rng(12345);
    auto logu = [&](double lo_exp, double hi_exp) {
        std::uniform_real_distribution<double> u(lo_exp, hi_exp);
        return std::pow(10.0, u(rng));
    };
    auto pick = [&](std::initializer_list<double> xs) {
        std::uniform_int_distribution<std::size_t> u(0, xs.size() - 1);
        return *(xs.begin() + u(rng));
    };
    double worst_root = 0.0, worst_resid = 0.0;
    for (int i = 0; i < 100; ++i) {
        SystemParams p{};
        p.omega_m = two_pi * logu(6.0, 7.3);
        p.gamma_m = two_pi * logu(1.0, 5.0);
        p.kappa = two_pi * logu(4.7, 6.3);
        p.delta_c = p.omega_m * pick({1.0, -1.0, 0.5});
        p.g0 = two_pi * logu(0.0, 6.2);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        p.g_ac = u01(rng) < 0.3 ? 0.0 : two_pi * logu(4.0, 6.7);
        p.gamma_a = two_pi * logu(4.7, 6.0);
        p.delta_a = p.omega_m * pick({1.0, -1.0});
        const double el = logu(3.0, 10.0);

        const auto st = solve_steady_state(p, el);
        const double nb = testoracle::brute_force_ns(p, el);
        worst_root = std::max(worst_root,
                              std::abs(st.n_s - nb) / std::max(nb, 1e-300));
        const cplx D = cplx(p.kappa, st.delta_tilde) - atomic_pump_term(p);
        worst_resid = std::max(worst_resid, std::abs(st.c_s * D - el) / el);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "100 draws: worst root rel diff %.3e, worst residual %.3e",
                  worst_root, worst_resid);
    return {worst_root < 1e-10 && worst_resid < 1e-9, buf};
}

} // namespace

int main(int argc, char** argv) {
    using Fn = Outcome (*)();
    const Fn checks[] = {criterion1, criterion2, criterion3, criterion4,
                         criterion5, criterion6, criterion7, criterion8,
                         criterion9, criterion10};
    int only = 0;
    if (argc > 1 && std::strcmp(argv[1], "all") != 0) only = std::atoi(argv[1]);

    int failures = 0;
    for (int k = 1; k <= 10; ++k) {
        if (only != 0 && k != only) continue;
        Outcome o{false, "exception"};
        try {
            o = checks[k - 1]();
        } catch (const std::exception& e) {
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("CRITERION %2d: %s — %s\n", k, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
