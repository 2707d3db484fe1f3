#include "omitsim/response.hpp"

#include <cmath>
#include <stdexcept>

#include "omitsim/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace omitsim {

const char* variant_name(Variant v) {
    return v == Variant::oracle_consistent ? "oracle-consistent" : "paper-literal";
}

Variant variant_from_name(const std::string& name) {
    if (name == "oracle-consistent") return Variant::oracle_consistent;
    if (name == "paper-literal") return Variant::paper_literal;
    throw config_error("unknown variant '" + name +
                       "' (expected oracle-consistent or paper-literal)");
}

std::complex<double> mechanical_susceptibility(const SystemParams& p,
                                               double delta) {
    return p.omega_m / std::complex<double>(p.omega_m * p.omega_m - delta * delta,
                                            -p.gamma_m * delta);
}

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

// Atomic self-energy in the c_- channel, Sigma_a(delta).
cplx sigma_atom(const SystemParams& p, double delta) {
    if (p.g_ac == 0.0) return {0.0, 0.0};
    return p.g_ac * p.g_ac * p.sigma_z_ss /
           cplx(p.gamma_a, p.delta_a - delta);
}

// E_p-normalized sideband amplitudes (c_-/E_p, c_+^*/E_p) from the linearized
// 2x2 system; see docs/derivation.md.
void solve_sidebands(const SystemParams& p, const SteadyState& st, double delta,
                     cplx& cm_over_ep, cplx& cpc_over_ep) {
    const cplx chi = mechanical_susceptibility(p, delta);
    const double n = st.n_s;
    const cplx g2chi = p.g0 * p.g0 * chi;

    const cplx m11 = cplx(p.kappa, st.delta_tilde - delta) - sigma_atom(p, delta)
                     - I * g2chi * n;
    const cplx m12 = -I * g2chi * st.c_s * st.c_s;
    const cplx m21 = I * g2chi * std::conj(st.c_s) * std::conj(st.c_s);
    const cplx sig_stokes =
        (p.g_ac == 0.0) ? cplx{0.0, 0.0}
                        : std::conj(p.g_ac * p.g_ac * p.sigma_z_ss /
                                    cplx(p.gamma_a, p.delta_a + delta));
    const cplx m22 = cplx(p.kappa, -(st.delta_tilde + delta)) - sig_stokes
                     + I * g2chi * n;

    const cplx det = m11 * m22 - m12 * m21;
    cm_over_ep = m22 / det;
    cpc_over_ep = -m21 / det;
}

// Literal closed form, printed detuning symbols read as the probe detuning.
cplx literal_cm_over_ep(const SystemParams& p, const SteadyState& st,
                        double delta) {
    const cplx chi = mechanical_susceptibility(p, delta);
    const double n = st.n_s;
    const cplx C = I * p.g0 * p.g0 * n * chi;
    const cplx A = cplx(p.kappa, -(delta + st.delta_tilde)) + C;
    cplx B{0.0, 0.0}, Bp{0.0, 0.0};
    if (p.g_ac != 0.0) {
        const double g2s = p.g_ac * p.g_ac * p.sigma_z_ss;
        B = g2s / cplx(p.gamma_a, -(p.delta_a + delta));
        Bp = std::conj(g2s / cplx(p.gamma_a, -p.delta_a + delta)); // (B(-delta))^*
    }
    // A' = (A(-delta))^*; chi(-delta)^* = chi(delta)
    const cplx Ap = cplx(p.kappa, st.delta_tilde - delta) - C;
    const cplx den = B * Bp + (A - C) * (Ap + C) - (A * Bp + Ap * B)
                     + 2.0 * I * C * st.delta_tilde;
    return (A - B) / den;
}

ProbeResponse eval_point(const SystemParams& p, const SteadyState& st,
                         double e_p, double delta, Variant v) {
    cplx cm_n, cpc_n;
    solve_sidebands(p, st, delta, cm_n, cpc_n);
    if (v == Variant::paper_literal) cm_n = literal_cm_over_ep(p, st, delta);

    ProbeResponse r;
    r.delta = delta;
    r.c_minus = e_p * cm_n;
    r.c_plus = std::conj(e_p * cpc_n);
    r.T = 1.0 - 2.0 * p.kappa * cm_n; // E_p-independent by construction
    r.T_sq = std::norm(r.T);
    r.phi_t = std::arg(r.T);
    return r;
}

} // namespace

ProbeResponse probe_response(const SystemParams& p, const SteadyState& steady,
                             double e_p, double delta, Variant v) {
    if (steady.hash != params_hash(p, steady.e_l))
        throw contract_error(
            "probe_response: steady state was solved for different parameters");
    if (!(e_p > 0.0))
        throw domain_error("probe_response: E_p must be positive");
    return eval_point(p, steady, e_p, delta, v);
}

std::vector<ProbeResponse> transmission_spectrum(
    const SystemParams& p, double e_l, double e_p,
    std::span<const double> delta_grid, Variant v, Exec exec, int workers) {
    for (std::size_t i = 1; i < delta_grid.size(); ++i)
        if (!(delta_grid[i] > delta_grid[i - 1]))
            throw domain_error(
                "transmission_spectrum: delta_grid must be strictly increasing");
    if (!(e_p > 0.0))
        throw domain_error("transmission_spectrum: E_p must be positive");

    const SteadyState st = solve_steady_state(p, e_l);
    std::vector<ProbeResponse> out(delta_grid.size());

    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < delta_grid.size(); ++i)
            out[i] = eval_point(p, st, e_p, delta_grid[i], v);
        return out;
    }

#if defined(_OPENMP)
    const long n = static_cast<long>(delta_grid.size());
    if (workers > 0) {
#pragma omp parallel for schedule(static) num_threads(workers)
        for (long i = 0; i < n; ++i)
            out[i] = eval_point(p, st, e_p, delta_grid[i], v);
    } else {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i)
            out[i] = eval_point(p, st, e_p, delta_grid[i], v);
    }
#else
    (void)workers;
    for (std::size_t i = 0; i < delta_grid.size(); ++i)
        out[i] = eval_point(p, st, e_p, delta_grid[i], v);
#endif
    return out;
}

} // namespace omitsim
