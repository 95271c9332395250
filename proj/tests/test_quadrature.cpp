#include "doctest.h"

#include <cmath>
#include <complex>

#include "biquadric/fresnel.hpp"
#include "biquadric/quadrature.hpp"

using namespace biquadric;

TEST_CASE("adaptive simpson on closed-form integrals") {
    auto r1 = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-11));
    auto r2 = adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-14);
    CHECK(r2.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    auto r3 = adaptive_simpson([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-12);
    CHECK(r3.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("oscillatory panels handle many wavelengths") {
    QuadratureSettings st;
    st.abs_tol = 1e-10;
    auto r = integrate_oscillatory([](double x) { return std::cos(x); }, 0.0, 40.0 * M_PI, 40.0, st);
    CHECK(std::fabs(r.value) <= 1e-9);
    auto r2 = integrate_oscillatory([](double x) { return std::cos(7.0 * x) * std::exp(-x / 50.0); },
                                    0.0, 200.0, 7.0, st);
    // closed form: Re of the integral of e^{(7i-1/50)x}
    std::complex<double> lam(-1.0 / 50.0, 7.0);
    std::complex<double> exact = (std::exp(lam * 200.0) - 1.0) / lam;
    CHECK(r.evals > 0);
    CHECK(r2.value == doctest::Approx(exact.real()).epsilon(1e-8));
}

TEST_CASE("fresnel integral basic values and symmetry") {
    CHECK(std::abs(fresnel_I(0.0) - std::complex<double>(2.0, 0.0)) < 1e-15);
    for (double psi : {0.3, 1.7, 2.6, 14.0, 250.0}) {
        auto a = fresnel_I(psi), b = fresnel_I(-psi);
        CHECK(std::abs(a - std::conj(b)) < 1e-15);
    }
    CHECK(std::abs(fresnel_I(1e4)) <= 0.03);
    CHECK(std::abs(fresnel_I(1e4)) == doctest::Approx(1.0 / std::sqrt(2e4)).epsilon(1e-2));
}

TEST_CASE("series and continued-fraction paths agree across the switch") {
    for (double psi = 1.8; psi <= 3.2; psi += 0.1) {
        auto series = biquadric::detail::fresnel_I_series(psi);
        auto cf = biquadric::detail::fresnel_cs_large(2.0 * std::sqrt(psi)) / std::sqrt(psi);
        CHECK(std::abs(series - cf) < 2e-9);
    }
}

// Independent oracle: direct adaptive quadrature of cos/sin(2 pi psi u^2).
TEST_CASE("fresnel integral matches direct quadrature") {
    QuadratureSettings st;
    st.abs_tol = 1e-11;
    for (double psi : {0.03, 0.31, 0.9, 1.5, 2.249, 2.26, 3.7, 8.0, 33.3, 204.0, 1817.0}) {
        double freq = std::max(1.0, 2.0 * psi);
        auto re = integrate_oscillatory(
            [psi](double u) { return std::cos(2.0 * M_PI * psi * u * u); }, -1.0, 1.0, freq, st);
        auto im = integrate_oscillatory(
            [psi](double u) { return std::sin(2.0 * M_PI * psi * u * u); }, -1.0, 1.0, freq, st);
        auto val = fresnel_I(psi);
        CHECK(std::abs(val - std::complex<double>(re.value, im.value)) < 1e-8);
    }
}

TEST_CASE("fresnel envelope holds on a log grid") {
    for (double lg = -2.0; lg <= 4.0; lg += 0.01) {
        double psi = std::pow(10.0, lg);
        CHECK(std::abs(fresnel_I(psi)) <= fresnel_I_bound(psi) * (1.0 + 1e-12));
        CHECK(std::abs(fresnel_I(psi)) <= 2.0 + 1e-12);
    }
}
