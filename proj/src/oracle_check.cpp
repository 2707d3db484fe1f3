#include "omitsim/oracle_check.hpp"

#include <algorithm>
#include <cmath>

#include "omitsim/dispersion.hpp"
#include "omitsim/errors.hpp"
#include "omitsim/units.hpp"

namespace omitsim {

OracleCheckResult oracle_check(const Scenario& s, const OracleCheckOptions& opt) {
    if (s.axis.quantity != AxisQuantity::delta)
        throw scenario_error("oracle_check: scenario must sweep delta");
    if (!(s.sys.gamma_m > 0.0))
        throw domain_error("oracle_check: gamma_m must be positive");

    const double e_l = s.drive_is_power
                           ? power_to_amplitude(s.pump_power_w, s.sys.lambda_l,
                                                s.sys.kappa)
                           : s.e_l;
    const double e_p = s.probe_is_abs ? s.e_p_abs : s.probe_ratio * e_l;
    const SteadyState st = solve_steady_state(s.sys, e_l);

    const int n_axis = s.axis.count;
    int stride = 1;
    if (opt.max_points > 0 && opt.max_points < n_axis)
        stride = (n_axis + opt.max_points - 1) / opt.max_points;

    OracleCheckResult out;
    out.scenario = s.name;

    std::vector<int> indices;
    for (int i = 0; i < n_axis; i += stride) indices.push_back(i);
    out.points.resize(indices.size());

    const double t_end = opt.t_end_factor / s.sys.gamma_m;

    std::exception_ptr first_error;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long k = 0; k < static_cast<long>(indices.size()); ++k) {
        if (first_error) continue;
        try {
            const int i = indices[k];
            const double delta =
                s.axis.min + (s.axis.max - s.axis.min) * i / double(n_axis - 1);
            OraclePoint pt;
            pt.delta = delta;
            pt.c_formula =
                probe_response(s.sys, st, e_p, delta, s.variant).c_minus;

            const double period = two_pi / delta;
            IntegrationControls ic = opt.controls;
            ic.dt_out = period / opt.samples_per_period;
            ic.initial.q = st.q_s;
            ic.initial.p = 0.0;
            ic.initial.c = st.c_s;
            ic.initial.sigma = st.sigma_s;

            const Trajectory traj = integrate(s.sys, {e_l, e_p, delta}, t_end, ic);
            const int periods = std::max(
                10,
                static_cast<int>(std::floor(opt.window_fraction * t_end / period)));
            const DemodResult dm = demodulate(traj, delta, periods);
            pt.c_demod = dm.c.h_minus;
            pt.rel_diff =
                std::abs(pt.c_demod - pt.c_formula) / std::abs(pt.c_formula);
            pt.steady_rel_diff = std::abs(dm.c.h_s - st.c_s) / std::abs(st.c_s);
            out.points[k] = pt;

            if (!opt.dump_path.empty() &&
                k + 1 == static_cast<long>(indices.size()))
                dump_trajectory_csv(traj, opt.dump_path);
        } catch (...) {
#if defined(_OPENMP)
#pragma omp critical(omitsim_oracle_check_err)
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const auto& pt : out.points) {
        out.max_rel_diff = std::max(out.max_rel_diff, pt.rel_diff);
        out.max_steady_rel_diff =
            std::max(out.max_steady_rel_diff, pt.steady_rel_diff);
    }
    return out;
}

} // namespace omitsim
