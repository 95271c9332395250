#include "doctest.h"

#include <algorithm>

#include "biquadric/rng.hpp"
#include "biquadric/slice_volume.hpp"
#include "biquadric/summation.hpp"

using namespace biquadric;

TEST_CASE("slice volume worked values") {
    // s=2, w=(1,1): the segment from (-1,1) to (1,-1), length 2*sqrt(2)
    auto v = cube_slice_volume({BigInt(1), BigInt(1)});
    CHECK(v == ExactSqrt::make(Rational(2), BigInt(2)));

    // w = e_1 in dimension s: the full facet, 2^{s-1}
    for (int s = 2; s <= 8; ++s) {
        std::vector<BigInt> w(static_cast<size_t>(s), BigInt(0));
        w[0] = 1;
        auto f = cube_slice_volume(w);
        CHECK(f == ExactSqrt::make(Rational(BigInt(1) << (s - 1)), BigInt(1)));
    }

    // s=2, w=(1,4): segment x2 in [-1/4,1/4], length sqrt(17)/2
    auto g = cube_slice_volume({BigInt(1), BigInt(4)});
    CHECK(g == ExactSqrt::make(Rational(1, 2), BigInt(17)));

    CHECK_THROWS_AS(cube_slice_volume({BigInt(0), BigInt(0)}), precondition_error);
}

TEST_CASE("slice volume is invariant under permutations and sign flips") {
    Rng rng(8101);
    for (int trial = 0; trial < 60; ++trial) {
        size_t s = 2 + rng.below(6);
        std::vector<BigInt> w;
        for (size_t i = 0; i < s; ++i)
            w.emplace_back(static_cast<long long>(rng.below(17)) - 8);
        if (is_zero_vector(w)) continue;
        auto base = cube_slice_volume(w);
        auto perm = w;
        for (size_t i = 0; i < s; ++i) std::swap(perm[i], perm[rng.below(s)]);
        for (auto& e : perm)
            if (rng.below(2)) e = -e;
        CHECK(cube_slice_volume(perm) == base);
    }
}

TEST_CASE("rational and double slice densities agree") {
    Rng rng(8102);
    for (int trial = 0; trial < 60; ++trial) {
        size_t s = 2 + rng.below(6);
        std::vector<BigInt> w;
        std::vector<double> wd;
        for (size_t i = 0; i < s; ++i) {
            long long e = static_cast<long long>(rng.below(25)) - 12;
            w.emplace_back(e);
            wd.push_back(static_cast<double>(e));
        }
        if (is_zero_vector(w)) continue;
        double exact = to_double(slice_density_at_zero(w));
        double approx = slice_density_at_zero(wd);
        CHECK(std::fabs(exact - approx) <= 1e-12 * std::max(1.0, std::fabs(exact)));
    }
}

TEST_CASE("fejer kernel normalization and support") {
    CHECK(fejer_kernel(0.0, 0.25) == doctest::Approx(4.0));
    CHECK(fejer_kernel(0.25, 0.25) == 0.0);
    CHECK(fejer_kernel(-0.3, 0.25) == 0.0);
    // exact unit mass: triangle of base 2*delta and height 1/delta
    for (double delta : {1e-3, 0.1, 2.0}) {
        double mass = delta * (1.0 / delta);  // area = base * height / 2 = 1
        CHECK(mass == doctest::Approx(1.0));
        // numeric check on a fine grid (trapezoid)
        int n = 20001;
        double h = 2 * delta / (n - 1);
        CompensatedSum acc;
        for (int i = 0; i < n; ++i) {
            double u = -delta + i * h;
            double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            acc.add(wgt * fejer_kernel(u, delta) * h);
        }
        CHECK(acc.value() == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK_THROWS_AS(fejer_kernel(0.0, 0.0), precondition_error);
}

// Monte Carlo cross-check: with the normal scaled to unit length (the slab
// {|w.x/||w||| < delta} has thickness 2*delta), the kernel integral
// int_cube K(w.x/||w||; delta) dx converges to the slice volume.
TEST_CASE("fejer kernel Monte Carlo slab estimates match exact slice volumes") {
    Rng seed_gen(8103);
    const double delta = 1e-3;
    int tested = 0, failures = 0;
    while (tested < 50) {
        size_t s = 2 + seed_gen.below(6);
        std::vector<BigInt> w;
        std::vector<double> wd;
        for (size_t i = 0; i < s; ++i) {
            long long e = static_cast<long long>(seed_gen.below(13)) - 6;
            w.emplace_back(e);
            wd.push_back(static_cast<double>(e));
        }
        if (is_zero_vector(w)) continue;
        ++tested;
        double norm = 0;
        for (double e : wd) norm += e * e;
        norm = std::sqrt(norm);
        double exact = cube_slice_volume(w).value();
        MeanAccumulator acc;
        Rng rng(shard_seed(991100, static_cast<u64>(tested)));
        const int n = 400000;
        for (int i = 0; i < n; ++i) {
            double dot = 0;
            for (size_t j = 0; j < s; ++j) dot += wd[j] * rng.uniform_sym();
            acc.add(fejer_kernel(dot / norm, delta));
        }
        double volume_factor = std::pow(2.0, static_cast<double>(s));
        double estimate = acc.mean() * volume_factor;
        double sigma = acc.sem() * volume_factor;
        // smoothing bias is O(delta^2); the dominant uncertainty is MC noise
        if (std::fabs(estimate - exact) > 3.0 * sigma + 1e-4) ++failures;
    }
    CHECK(failures <= 1);  // 3-sigma test over 50 draws may admit a rare outlier
}
