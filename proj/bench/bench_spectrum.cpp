// Compares the serial reference spectrum kernel against the OpenMP path.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "omitsim/response.hpp"
#include "omitsim/scenario.hpp"
#include "omitsim/units.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace omitsim;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = 200000;
    if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);

    const Scenario fig = preset("fig2d").front();
    const SystemParams p = fig.sys;
    const double e_l = fig.e_l;
    const double e_p = fig.probe_ratio * e_l;

    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = 0.5 * p.omega_m + p.omega_m * i / double(n - 1);

#if defined(_OPENMP)
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("spectrum kernel, %zu grid points, %d thread(s)\n", n, threads);

    double t_serial = 1e300, t_parallel = 1e300;
    std::vector<ProbeResponse> ref, par;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = clock_type::now();
        ref = transmission_spectrum(p, e_l, e_p, grid,
                                    Variant::oracle_consistent, Exec::serial);
        t_serial = std::min(t_serial, seconds_since(t0));

        t0 = clock_type::now();
        par = transmission_spectrum(p, e_l, e_p, grid,
                                    Variant::oracle_consistent, Exec::parallel);
        t_parallel = std::min(t_parallel, seconds_since(t0));
    }

    double max_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_diff = std::max(max_diff, std::abs(ref[i].T - par[i].T));

    std::printf("  serial   : %8.1f ms  (%.1f Mpoints/s)\n", 1e3 * t_serial,
                n / t_serial / 1e6);
    std::printf("  parallel : %8.1f ms  (%.1f Mpoints/s)\n", 1e3 * t_parallel,
                n / t_parallel / 1e6);
    std::printf("  speedup  : %.2fx   max |T_serial - T_parallel| = %g\n",
                t_serial / t_parallel, max_diff);
    return max_diff == 0.0 ? 0 : 1;
}
