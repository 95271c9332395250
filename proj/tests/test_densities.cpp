#include "doctest.h"

#include <cmath>

#include "biquadric/densities.hpp"
#include "biquadric/rng.hpp"

using namespace biquadric;

TEST_CASE("rho worked values are exact rationals") {
    CoeffVector e1(7, BigInt(0));
    e1[0] = 1;
    auto r = rho_infinity(e1);
    CHECK(r.method == DensityValue::Method::EXACT_RATIONAL);
    CHECK(*r.exact == Rational(64));

    auto r2 = rho_infinity(make_vector({1, 1}));
    CHECK(*r2.exact == Rational(2));

    CHECK_THROWS_AS(rho_infinity(CoeffVector(4, BigInt(0))), precondition_error);
}

TEST_CASE("rho scales by k^-2 as an exact rational identity") {
    Rng rng(4401);
    for (int trial = 0; trial < 60; ++trial) {
        int s = 2 + static_cast<int>(rng.below(6));
        CoeffVector y;
        for (int i = 0; i < s; ++i)
            y.emplace_back(static_cast<long long>(rng.below(15)) - 7);
        if (is_zero_vector(y)) continue;
        long long k = 2 + static_cast<long long>(rng.below(4));
        CoeffVector ky;
        for (auto& e : y) ky.emplace_back(k * e);
        CHECK(rho_infinity_exact(ky) * k * k == rho_infinity_exact(y));
    }
}

TEST_CASE("sigma vanishes exactly for definite forms") {
    CoeffVector ones(7, BigInt(1));
    auto v = sigma_infinity(ones);
    CHECK(v.method == DensityValue::Method::EXACT_RATIONAL);
    CHECK(v.value == 0.0);
    CHECK(*v.exact == Rational(0));

    CoeffVector negs(7, BigInt(-3));
    CHECK(sigma_infinity(negs).value == 0.0);

    CHECK_THROWS_AS(sigma_infinity(make_vector({1, 0, 1, 1, 1, 1, -1})), precondition_error);
}

// Independent oracle: the slab measure of |F(x;y)| < delta over the unit
// cube, divided by 2*delta, estimates the same density; Richardson in delta^2
// removes the leading smoothing bias.
TEST_CASE("sigma matches the Monte Carlo slab oracle") {
    CoeffVector x = make_vector({1, 1, 1, 1, 1, 1, -1});
    QuadratureSettings qs;
    qs.abs_tol = 1e-8;
    auto quad = sigma_infinity(x, qs);
    CHECK(quad.value > 0);

    std::vector<double> xd;
    for (const auto& e : x) xd.push_back(to_double(e));
    auto slab = [&](double delta, u64 seed) -> std::pair<double, double> {
        MeanAccumulator acc;
        Rng rng(seed);
        const long long n = 3000000;
        for (long long i = 0; i < n; ++i) {
            double F = 0;
            for (double c : xd) {
                double u = rng.uniform_sym();
                F += c * u * u;
            }
            acc.add(std::fabs(F) < delta ? 1.0 : 0.0);
        }
        double scale = std::pow(2.0, 7.0) / (2.0 * delta);
        return {acc.mean() * scale, acc.sem() * scale};
    };
    auto [f1, s1] = slab(0.08, 555001);
    auto [f2, s2] = slab(0.04, 555002);
    double extrap = (4.0 * f2 - f1) / 3.0;
    double sigma_mc = std::sqrt((16.0 / 9.0) * s2 * s2 + (1.0 / 9.0) * s1 * s1);
    CHECK(std::fabs(extrap - quad.value) <= 3.0 * sigma_mc + 1e-3);
}

TEST_CASE("sigma homogeneity sigma(kx) = sigma(x)/k") {
    QuadratureSettings qs;
    qs.abs_tol = 1e-9;
    CoeffVector x = make_vector({2, -1, 1, 3, -2, 1, 1});
    auto base = sigma_infinity(x, qs);
    for (long long k : {2, 3}) {
        CoeffVector kx;
        for (const auto& e : x) kx.emplace_back(k * e);
        auto scaled = sigma_infinity(kx, qs);
        CHECK(scaled.value * static_cast<double>(k) ==
              doctest::Approx(base.value).epsilon(2e-6));
    }
}

TEST_CASE("sigma is symmetric under coordinate permutation") {
    QuadratureSettings qs;
    qs.abs_tol = 1e-9;
    CoeffVector x = make_vector({1, 2, -3, 1, -1, 4, 2});
    CoeffVector p = make_vector({4, 2, 2, -3, 1, -1, 1});
    auto a = sigma_infinity(x, qs), b = sigma_infinity(p, qs);
    CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-9);
}

TEST_CASE("sigma obeys the determinant-decay envelope on a corpus") {
    Rng rng(4402);
    QuadratureSettings qs;
    qs.abs_tol = 1e-6;
    double worst = 0;
    for (int trial = 0; trial < 30; ++trial) {
        CoeffVector x;
        bool pos = true, neg = true;
        for (int i = 0; i < 7; ++i) {
            long long e = static_cast<long long>(rng.below(9)) - 4;
            if (e == 0) e = 1;
            pos = pos && e > 0, neg = neg && e < 0;
            x.emplace_back(e);
        }
        if (pos || neg) continue;
        auto v = sigma_infinity(x, qs);
        double absdet = std::fabs(to_double(delta_profile(x).delta));
        worst = std::max(worst, std::fabs(v.value) * std::sqrt(absdet));
        CHECK(std::fabs(v.value) <= 2000.0 / std::sqrt(absdet));
    }
    // recorded corpus constant (observed ~1.04e3 on this seeded corpus)
    CHECK(worst <= 2000.0);
    MESSAGE("max |sigma| * sqrt|Delta| over corpus: ", worst);
}

TEST_CASE("tau methods agree at reduced sampling (smoke)") {
    TauSettings ts;
    ts.samples_a = 1500;
    ts.samples_b = 300000;
    ts.point_tol_a = 5e-3;
    ts.threads = 1;
    auto tau = tau_infinity(7, ts);
    CHECK(tau.method_a.value > 0);
    CHECK(tau.method_b.value > 0);
    double diff = std::fabs(tau.method_a.value - tau.method_b.value);
    double combined = 3.0 * std::sqrt(tau.method_a.err * tau.method_a.err +
                                      tau.method_b.err * tau.method_b.err);
    CHECK(diff <= combined + 0.05 * tau.method_b.value);
    MESSAGE("tau A=", tau.method_a.value, " +/- ", tau.method_a.err, "  B=", tau.method_b.value,
            " +/- ", tau.method_b.err);
}

TEST_CASE("rho-side shell integral matches its closed form") {
    TauSettings ts;
    ts.samples_a = 1;  // unused side
    ts.samples_b = 1500000;
    ts.threads = 1;
    auto tau = tau_infinity(7, ts);

    ShellIntegralSettings st;
    st.samples = 400000;
    st.threads = 1;
    auto rep = j_integral(ShellSide::RHO, 7, 1e10, 1.0, tau.method_b.value, st);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(0.05));

    // k at the top of the range: empty log-range, exact zero
    double ktop = std::pow(1e10, 1.0 / 9.0);
    auto zero = j_integral(ShellSide::RHO, 7, 1e10, ktop, tau.method_b.value, st);
    CHECK(zero.numeric.value == 0.0);
    CHECK(zero.closed_form == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(j_integral(ShellSide::RHO, 7, 1e10, 2.0 * ktop, 1.0, st), precondition_error);
}

TEST_CASE("sigma-side shell integral matches its closed form (coarse)") {
    TauSettings ts;
    ts.samples_a = 1;
    ts.samples_b = 1000000;
    ts.threads = 1;
    auto tau = tau_infinity(7, ts);

    ShellIntegralSettings st;
    st.samples = 6000;
    st.point_tol = 3e-3;
    st.threads = 1;
    auto rep = j_integral(ShellSide::SIGMA, 7, 1e10, 1.0, tau.method_b.value, st);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(0.08));
}
