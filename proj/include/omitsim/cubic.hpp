#pragma once
#include <array>
#include <complex>

namespace omitsim {

struct CubicRoots {
    std::array<std::complex<double>, 3> roots{};
    int count = 0; // number of valid entries (= effective polynomial degree)
};

// Roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0 with real coefficients.
// A vanishing leading coefficient reduces the degree internally. Each root
// gets one Newton polish on the original polynomial.
CubicRoots cubic_roots(double c3, double c2, double c1, double c0);

} // namespace omitsim
