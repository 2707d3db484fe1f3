#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "omitsim/params.hpp"
#include "omitsim/errors.hpp"
#include "omitsim/units.hpp"

using namespace omitsim;

namespace {

SystemParams paper_preset() {
    SystemParams p{};
    p.omega_m = cyclic_to_angular(10e6);
    p.gamma_m = cyclic_to_angular(140.0);
    p.kappa = cyclic_to_angular(215e3);
    p.delta_c = cyclic_to_angular(10e6);
    p.g0 = cyclic_to_angular(1.2e6);
    p.g_ac = cyclic_to_angular(4e6);
    p.gamma_a = cyclic_to_angular(200e3);
    p.delta_a = cyclic_to_angular(10e6);
    return p;
}

} // namespace

TEST_CASE("validate accepts the experimental preset") {
    const auto r = validate(paper_preset());
    CHECK(r.passed);
    CHECK(r.violations.empty());
    CHECK(r.sideband_resolved); // omega_m > kappa
}

TEST_CASE("validate flags kappa = 0") {
    auto p = paper_preset();
    p.kappa = 0.0;
    const auto r = validate(p);
    CHECK_FALSE(r.passed);
    bool mentions_kappa = false;
    for (const auto& v : r.violations)
        mentions_kappa = mentions_kappa || v.find("kappa") != std::string::npos;
    CHECK(mentions_kappa);
}

TEST_CASE("validate flags inversion outside [-1, 1]") {
    auto p = paper_preset();
    p.sigma_z_ss = 2.0;
    const auto r = validate(p);
    CHECK_FALSE(r.passed);
    bool mentions = false;
    for (const auto& v : r.violations)
        mentions = mentions || v.find("sigma_z") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("validate_drive enforces the weak-probe ratio unless overridden") {
    const auto p = paper_preset();
    DriveParams d{1e7, 2e6, p.omega_m}; // e_p = 0.2 e_l
    CHECK_FALSE(validate_drive(p, d).passed);
    CHECK(validate_drive(p, d, false).passed);
    d.e_p = 1e6;
    CHECK(validate_drive(p, d).passed);
}

TEST_CASE("cyclic_to_angular definition") {
    CHECK(cyclic_to_angular(0.0) == 0.0);
    CHECK(cyclic_to_angular(10e6) == doctest::Approx(6.2831853e7).epsilon(1e-7));
    CHECK(cyclic_to_angular(215e3) == doctest::Approx(1.3509e6).epsilon(1e-4));
    CHECK(angular_to_cyclic(cyclic_to_angular(437.25)) ==
          doctest::Approx(437.25).epsilon(1e-14));
}

TEST_CASE("power_to_amplitude") {
    const double kappa = cyclic_to_angular(215e3);

    SUBCASE("zero power") {
        CHECK(power_to_amplitude(0.0, 1064e-9, kappa) == 0.0);
    }
    SUBCASE("6 uW at 1064 nm") {
        // sqrt(2 kappa P / (hbar 2 pi c / lambda)), evaluated independently
        const double e = power_to_amplitude(6e-6, 1064e-9, kappa);
        CHECK(e == doctest::Approx(9.3182044512e9).epsilon(1e-9));
        CHECK(e == doctest::Approx(9.3e9).epsilon(5e-3)); // headline value
    }
    SUBCASE("nonpositive wavelength is a domain error") {
        CHECK_THROWS_AS(power_to_amplitude(1e-6, 0.0, kappa), domain_error);
        CHECK_THROWS_AS(power_to_amplitude(1e-6, -1.0, kappa), domain_error);
    }
    SUBCASE("roundtrip is the algebraic inverse") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> pw(1e-9, 1e-3);
        for (int i = 0; i < 200; ++i) {
            const double P = pw(rng);
            const double back =
                amplitude_to_power(power_to_amplitude(P, 1064e-9, kappa),
                                   1064e-9, kappa);
            CHECK(std::abs(back - P) <= 1e-12 * P);
        }
    }
    SUBCASE("sqrt-power scaling is exact") {
        for (double P : {1e-7, 6e-6, 4.2e-4}) {
            const double e1 = power_to_amplitude(P, 1064e-9, kappa);
            const double e2 = power_to_amplitude(4.0 * P, 1064e-9, kappa);
            CHECK(e2 == 2.0 * e1);
        }
    }
    SUBCASE("pure: identical inputs give identical bits") {
        const double a = power_to_amplitude(3.7e-6, 1064e-9, kappa);
        const double b = power_to_amplitude(3.7e-6, 1064e-9, kappa);
        CHECK(a == b);
    }
}

TEST_CASE("params_hash distinguishes parameter sets") {
    const auto p = paper_preset();
    auto q = p;
    q.g_ac = std::nextafter(q.g_ac, 1e99);
    CHECK(params_hash(p, 1.0) != params_hash(q, 1.0));
    CHECK(params_hash(p, 1.0) != params_hash(p, 2.0));
    CHECK(params_hash(p, 1.0) == params_hash(p, 1.0));
}
