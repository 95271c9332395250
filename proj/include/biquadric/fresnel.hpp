#pragma once

#include <cmath>
#include <complex>

#include "biquadric/errors.hpp"

namespace biquadric {

// I(psi) = integral over [-1,1] of e(psi u^2) du, the normalized quadratic
// oscillatory integral. |I| <= min(2, |psi|^{-1/2}).
//
// Evaluation: for small |psi| the entire Taylor series
//   I(psi) = 2 sum_n (2 pi i psi)^n / (n! (2n+1))
// stays below ~6 digits of cancellation; beyond the switch point it maps to
// the Fresnel integrals, C(x) + i S(x) = (1+i)/2 erf(z), z = sqrt(pi)(1-i)x/2,
// with erfc evaluated by its continued fraction (modified Lentz). Note
// e^{-z^2} = e^{i pi x^2 / 2}, a pure phase, so nothing overflows.

namespace detail {

inline std::complex<double> erfc_continued_fraction(std::complex<double> z) {
    // erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z +) (1/2)/(z +) (1)/(z +) (3/2)/(z +) ...
    // This computes only the continued-fraction factor K(z).
    const double tiny = 1e-280;
    std::complex<double> f = tiny, c = tiny, d = 0.0;
    for (int n = 1; n <= 300; ++n) {
        std::complex<double> an = n == 1 ? std::complex<double>(1.0) : std::complex<double>((n - 1) * 0.5);
        std::complex<double> bn = z;
        d = bn + an * d;
        if (std::abs(d) < tiny) d = tiny;
        c = bn + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        std::complex<double> delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return f;
}

// C(x) + i S(x) for x >= 0 via the erfc continued fraction (use only for
// x >~ 2.5 where the fraction converges quickly).
inline std::complex<double> fresnel_cs_large(double x) {
    const double sqrt_pi = std::sqrt(M_PI);
    std::complex<double> z(sqrt_pi * x / 2.0, -sqrt_pi * x / 2.0);  // sqrt(pi)(1-i)x/2
    std::complex<double> phase = std::polar(1.0, M_PI * x * x / 2.0);  // e^{-z^2}
    std::complex<double> erfc = phase / sqrt_pi * erfc_continued_fraction(z);
    std::complex<double> erf = 1.0 - erfc;
    return std::complex<double>(0.5, 0.5) * erf;  // (1+i)/2 erf(z)
}

inline std::complex<double> fresnel_I_series(double psi) {
    std::complex<double> term(1.0, 0.0), acc(1.0, 0.0);
    std::complex<double> w(0.0, 2.0 * M_PI * psi);
    for (int n = 1; n <= 120; ++n) {
        term *= w / static_cast<double>(n);
        std::complex<double> contrib = term / static_cast<double>(2 * n + 1);
        acc += contrib;
        if (std::abs(contrib) < 1e-18 * std::max(1.0, std::abs(acc)) && n > 4) break;
    }
    return 2.0 * acc;
}

}  // namespace detail

inline std::complex<double> fresnel_I(double psi) {
    if (std::isnan(psi)) throw precondition_error("fresnel_I: NaN argument");
    double a = std::fabs(psi);
    std::complex<double> val;
    if (a <= 2.25) {
        val = detail::fresnel_I_series(a);
    } else {
        double x = 2.0 * std::sqrt(a);
        val = detail::fresnel_cs_large(x) / std::sqrt(a);
    }
    return psi >= 0 ? val : std::conj(val);
}

// Envelope min(2, |psi|^{-1/2}) used by tail majorants (checked numerically
// in the test suite).
inline double fresnel_I_bound(double psi) {
    double a = std::fabs(psi);
    return a <= 0.25 ? 2.0 : 1.0 / std::sqrt(a);
}

}  // namespace biquadric
