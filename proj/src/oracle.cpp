#include "omitsim/oracle.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <fstream>

#include "omitsim/csv_io.hpp"
#include "omitsim/errors.hpp"
#include "omitsim/units.hpp"

namespace omitsim {

namespace {

using state_t = std::array<double, 6>; // q, p, Re c, Im c, Re sigma, Im sigma
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

struct Rhs {
    const SystemParams& p;
    const DriveTones& d;
    std::size_t* evals;

    void operator()(const state_t& y, state_t& dydt, double t) const {
        ++*evals;
        const double q = y[0], mom = y[1];
        const cplx c{y[2], y[3]};
        const cplx sig{y[4], y[5]};
        const cplx probe =
            d.e_p != 0.0 ? d.e_p * std::exp(cplx{0.0, -d.delta * t}) : cplx{0.0, 0.0};
        const double dq = p.omega_m * mom;
        const double dp = -p.omega_m * q - p.gamma_m * mom + p.g0 * std::norm(c);
        const cplx dc = -cplx(p.kappa, p.delta_c) * c + I * p.g0 * c * q -
                        I * p.g_ac * sig + d.e_l + probe;
        const cplx ds = -cplx(p.gamma_a, p.delta_a) * sig +
                        I * p.g_ac * c * p.sigma_z_ss;
        dydt = {dq, dp, dc.real(), dc.imag(), ds.real(), ds.imag()};
    }
};

// Drive-scaled magnitude estimates for the divergence detector.
struct Scales {
    double c, q, sigma;
};

Scales divergence_scales(const SystemParams& p, const DriveTones& d,
                         const MeanFieldState& init) {
    const double drive = d.e_l + d.e_p;
    const double c0 = std::abs(init.c);
    const double cs = std::max({drive / std::max(p.kappa, 1e-300), c0, 1.0});
    const double qs = std::max({p.g0 * cs * cs / p.omega_m, std::abs(init.q), 1.0});
    const double den = std::hypot(p.gamma_a, p.delta_a);
    const double ss = std::max(
        {den > 0.0 ? p.g_ac * cs / den : cs, std::abs(init.sigma), 1.0});
    return {cs, qs, ss};
}

} // namespace

MeanFieldState derivative(const MeanFieldState& s, const SystemParams& p,
                          const DriveTones& d, double t) {
    std::size_t evals = 0;
    const Rhs rhs{p, d, &evals};
    state_t y{s.q, s.p, s.c.real(), s.c.imag(), s.sigma.real(), s.sigma.imag()};
    state_t dy;
    rhs(y, dy, t);
    MeanFieldState out;
    out.q = dy[0];
    out.p = dy[1];
    out.c = {dy[2], dy[3]};
    out.sigma = {dy[4], dy[5]};
    out.t = t;
    return out;
}

Trajectory integrate(const SystemParams& p, const DriveTones& d, double t_end,
                     const IntegrationControls& controls) {
    if (!(t_end > 0.0)) throw domain_error("integrate: t_end must be positive");

    double dt_out = controls.dt_out;
    if (dt_out <= 0.0) {
        // resolve the fastest drive/detuning scale with margin
        const double w = std::max({std::abs(d.delta), std::abs(p.delta_c),
                                   std::abs(p.delta_a), p.omega_m});
        dt_out = (w > 0.0) ? two_pi / w / 32.0 : t_end / 1024.0;
    }
    const std::size_t n_out =
        static_cast<std::size_t>(std::floor(t_end / dt_out + 1e-9)) + 1;

    Trajectory traj;
    traj.t.reserve(n_out);
    traj.q.reserve(n_out);
    traj.p.reserve(n_out);
    traj.c.reserve(n_out);
    traj.sigma.reserve(n_out);
    traj.meta.dt_out = dt_out;

    const Scales sc = divergence_scales(p, d, controls.initial);
    const double lim_c = controls.divergence_factor * sc.c;
    const double lim_q = controls.divergence_factor * sc.q;
    const double lim_s = controls.divergence_factor * sc.sigma;

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(controls.abs_tol, controls.rel_tol,
                                        ode::runge_kutta_dopri5<state_t>());
    const Rhs rhs{p, d, &traj.meta.rhs_evals};

    state_t y{controls.initial.q, controls.initial.p,
              controls.initial.c.real(), controls.initial.c.imag(),
              controls.initial.sigma.real(), controls.initial.sigma.imag()};
    double t = 0.0;
    double dt = dt_out / 4.0;
    const double dt_min = t_end * 1e-15;

    auto record = [&](double tk) {
        traj.t.push_back(tk);
        traj.q.push_back(y[0]);
        traj.p.push_back(y[1]);
        traj.c.emplace_back(y[2], y[3]);
        traj.sigma.emplace_back(y[4], y[5]);
    };
    auto check_divergence = [&](double tk) {
        const double cm = std::hypot(y[2], y[3]);
        const double sm = std::hypot(y[4], y[5]);
        const bool bad = !std::isfinite(cm) || !std::isfinite(sm) ||
                         !std::isfinite(y[0]) || !std::isfinite(y[1]) ||
                         cm > lim_c || sm > lim_s || std::abs(y[0]) > lim_q ||
                         std::abs(y[1]) > lim_q;
        if (bad)
            throw instability_error(
                "integrate: divergence detector tripped at t = " +
                    format_g17(tk),
                tk);
    };

    record(0.0);
    check_divergence(0.0);
    for (std::size_t k = 1; k < n_out; ++k) {
        const double t_target = static_cast<double>(k) * dt_out;
        while (t < t_target) {
            double dt_try = std::min(dt, t_target - t);
            const auto res = stepper.try_step(rhs, y, t, dt_try);
            if (res == ode::controlled_step_result::fail) {
                ++traj.meta.rejected_steps;
                dt = dt_try;
                if (dt < dt_min)
                    throw stiffness_error(
                        "integrate: step size underflow (stiff system); "
                        "consider a relaxed-gamma_m preset");
                continue;
            }
            ++traj.meta.accepted_steps;
            // controller's suggestion becomes the next natural step
            dt = std::max(dt_try, dt_min);
            check_divergence(t);
        }
        record(t_target);
    }
    return traj;
}

DemodResult demodulate(const Trajectory& traj, double delta,
                       int window_periods) {
    if (traj.t.size() < 2)
        throw arity_error("demodulate: trajectory too short");
    if (window_periods < 10)
        throw arity_error("demodulate: need at least 10 beat periods");
    if (!(delta > 0.0))
        throw domain_error("demodulate: delta must be positive");

    const double period = two_pi / delta;
    const double duration = window_periods * period;
    const double t_end = traj.t.back();
    if (duration > t_end - traj.t.front() + 1e-12 * t_end)
        throw arity_error("demodulate: window longer than trajectory tail");

    const double dt = traj.meta.dt_out;
    const double samples_f = duration / dt;
    const auto m = static_cast<std::size_t>(std::llround(samples_f));
    if (std::abs(samples_f - static_cast<double>(m)) > 1e-6 * samples_f)
        throw alignment_error(
            "demodulate: window does not cover an integer sample count "
            "(non-integer period coverage)");
    if (m + 1 > traj.t.size())
        throw arity_error("demodulate: window longer than trajectory tail");

    const std::size_t i0 = traj.t.size() - 1 - m;

    auto project = [&](auto getter) {
        ToneEstimate est;
        cplx acc_s{}, acc_m{}, acc_p{};
        for (std::size_t j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            const double t = traj.t[i0 + j];
            const cplx h = getter(i0 + j);
            const cplx em = std::exp(cplx{0.0, delta * t});  // e^{+i delta t}
            acc_s += w * h;
            acc_m += w * h * em;
            acc_p += w * h * std::conj(em);
        }
        const double norm = static_cast<double>(m);
        est.h_s = acc_s / norm;
        est.h_minus = acc_m / norm;
        est.h_plus = acc_p / norm;
        // residual: AC power outside the two sidebands
        double ac = 0.0;
        for (std::size_t j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            ac += w * std::norm(getter(i0 + j) - est.h_s);
        }
        ac /= norm;
        const double tones = std::norm(est.h_minus) + std::norm(est.h_plus);
        est.residual = (ac > 0.0) ? std::max(0.0, 1.0 - tones / ac) : 0.0;
        return est;
    };

    DemodResult out;
    out.periods = window_periods;
    out.c = project([&](std::size_t i) { return traj.c[i]; });
    out.q = project([&](std::size_t i) { return cplx{traj.q[i], 0.0}; });
    out.sigma = project([&](std::size_t i) { return traj.sigma[i]; });
    return out;
}

void dump_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("dump_trajectory_csv: cannot open " + path);
    f << "t,q,p,re_c,im_c,re_sigma,im_sigma\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        f << format_g17(traj.t[i]) << ',' << format_g17(traj.q[i]) << ','
          << format_g17(traj.p[i]) << ',' << format_g17(traj.c[i].real()) << ','
          << format_g17(traj.c[i].imag()) << ','
          << format_g17(traj.sigma[i].real()) << ','
          << format_g17(traj.sigma[i].imag()) << '\n';
    }
    if (!f) throw io_error("dump_trajectory_csv: write failed for " + path);
}

} // namespace omitsim
