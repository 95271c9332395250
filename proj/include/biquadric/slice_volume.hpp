#pragma once

#include <cmath>
#include <vector>

#include "biquadric/exact_sqrt.hpp"
#include "biquadric/forms.hpp"
#include "biquadric/integers.hpp"

namespace biquadric {

// Central cross-sections of the cube [-1,1]^s by the hyperplane w.x = 0.
//
// Writing T = sum_i w_i U_i with U_i uniform on [-1,1], the slice volume is
//   V(w) = ||w||_2 * 2^s * f_T(0),
// and f_T(0) has the exact signed-corner (box-spline) form over the k
// nonzero weights, S = sum |w_i|:
//   f_T(0) = (2^k (k-1)! prod |w_i|)^{-1} sum_{eps in {0,1}^k} (-1)^{|eps|}
//            ((S - 2 sum_{i in eps} |w_i|)_+)^{k-1}.
// Zero weights drop out of T, hence contribute nothing beyond the 2^s factor.

namespace detail {

inline BigInt pos_pow(const BigInt& t, unsigned e) {
    if (t <= 0) return 0;          // (t_+)^0 = 0 for t <= 0, 1 for t > 0
    if (e == 0) return 1;
    return big_pow(t, e);
}

inline double pos_pow(double t, int e) {
    if (t <= 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= t;
    return e == 0 ? 1.0 : r;
}

}  // namespace detail

// Density at zero of sum_i w_i U_i over the nonzero entries of w, exact.
inline Rational slice_density_at_zero(const std::vector<BigInt>& w) {
    std::vector<BigInt> a;
    for (const auto& e : w)
        if (e != 0) a.push_back(big_abs(e));
    const size_t k = a.size();
    if (k == 0) throw precondition_error("slice_density_at_zero: zero vector");
    if (k > 24) throw budget_error("slice_density_at_zero: too many nonzero weights");
    BigInt S = 0;
    for (const auto& e : a) S += e;

    // Gray-code walk over the 2^k corner terms.
    BigInt acc = 0, corner = S;
    unsigned gray = 0;
    int sign = 1;
    acc += detail::pos_pow(corner, static_cast<unsigned>(k - 1));
    for (unsigned code = 1; code < (1u << k); ++code) {
        unsigned new_gray = code ^ (code >> 1);
        unsigned bit = new_gray ^ gray;
        int idx = __builtin_ctz(bit);
        if (new_gray & bit)
            corner -= 2 * a[static_cast<size_t>(idx)];
        else
            corner += 2 * a[static_cast<size_t>(idx)];
        gray = new_gray;
        sign = (__builtin_popcount(gray) & 1) ? -1 : 1;
        acc += sign * detail::pos_pow(corner, static_cast<unsigned>(k - 1));
    }

    BigInt denom = BigInt(1) << k;
    for (size_t i = 2; i <= k - 1; ++i) denom *= BigInt(i);  // (k-1)!
    for (const auto& e : a) denom *= e;
    return Rational(acc, denom);
}

namespace detail {

// Exact corner sum over rational weights (doubles convert to cpp_rational
// exactly, so this path has no rounding at all).
inline double slice_density_rational(const std::vector<double>& a, size_t k) {
    Rational S = 0;
    std::vector<Rational> ra;
    for (size_t i = 0; i < k; ++i) {
        ra.emplace_back(a[i]);
        S += ra.back();
    }
    Rational acc = 0, corner = S;
    unsigned gray = 0;
    auto pos_pow_rat = [&](const Rational& t) -> Rational {
        if (t <= 0) return 0;
        if (k == 1) return 1;
        Rational r = t;
        for (size_t e = 2; e <= k - 1; ++e) r *= t;
        return r;
    };
    acc += pos_pow_rat(corner);
    for (unsigned code = 1; code < (1u << k); ++code) {
        unsigned new_gray = code ^ (code >> 1);
        unsigned bit = new_gray ^ gray;
        int idx = __builtin_ctz(bit);
        if (new_gray & bit)
            corner -= 2 * ra[static_cast<size_t>(idx)];
        else
            corner += 2 * ra[static_cast<size_t>(idx)];
        gray = new_gray;
        int sign = (__builtin_popcount(gray) & 1) ? -1 : 1;
        acc += sign * pos_pow_rat(corner);
    }
    Rational denom = BigInt(1) << k;
    for (size_t i = 2; i <= k - 1; ++i) denom *= BigInt(i);
    for (const auto& e : ra) denom *= e;
    return to_double(acc / denom);
}

}  // namespace detail

// Same density for real weights. The corner sum is a (k-1)-th divided
// difference whose floating-point cancellation grows like prod(S / w_i);
// weights below 1e-9 * S are dropped (they move the density at zero by only
// O(w_i)), and if the remaining spread still dominates the result the sum is
// redone in exact rational arithmetic (doubles are dyadic rationals).
inline double slice_density_at_zero(const std::vector<double>& w) {
    double S_all = 0;
    for (double e : w) S_all += std::fabs(e);
    if (S_all == 0) throw precondition_error("slice_density_at_zero: zero vector");
    std::vector<double> a;
    for (double e : w)
        if (std::fabs(e) > 1e-9 * S_all) a.push_back(std::fabs(e));
    const size_t k = a.size();
    if (k == 0) throw precondition_error("slice_density_at_zero: zero vector");
    double S = 0;
    for (double e : a) S += e;

    long double acc = 0.0L, corner = S;
    unsigned gray = 0;
    acc += detail::pos_pow(static_cast<double>(corner), static_cast<int>(k - 1));
    for (unsigned code = 1; code < (1u << k); ++code) {
        unsigned new_gray = code ^ (code >> 1);
        unsigned bit = new_gray ^ gray;
        int idx = __builtin_ctz(bit);
        if (new_gray & bit)
            corner -= 2.0L * a[static_cast<size_t>(idx)];
        else
            corner += 2.0L * a[static_cast<size_t>(idx)];
        gray = new_gray;
        int sign = (__builtin_popcount(gray) & 1) ? -1 : 1;
        acc += sign * detail::pos_pow(static_cast<double>(corner), static_cast<int>(k - 1));
    }

    long double denom = std::pow(2.0L, static_cast<long double>(k));
    for (size_t i = 2; i <= k - 1; ++i) denom *= static_cast<long double>(i);
    for (double e : a) denom *= e;
    double value = static_cast<double>(acc / denom);
    double term_scale = detail::pos_pow(S, static_cast<int>(k - 1));
    double err_proxy = 5.5e-20 * std::ldexp(term_scale, static_cast<int>(k)) /
                       std::fabs(static_cast<double>(denom));
    if (err_proxy > 1e-9 * std::fabs(value)) return detail::slice_density_rational(a, k);
    return value;
}

// Exact (s-1)-volume of the central slice, as rational * sqrt(integer).
inline ExactSqrt cube_slice_volume(const std::vector<BigInt>& w) {
    if (w.empty() || is_zero_vector(w)) throw precondition_error("cube_slice_volume: zero vector");
    BigInt norm2 = 0;
    for (const auto& e : w) norm2 += e * e;
    Rational f0 = slice_density_at_zero(w);
    Rational coef = f0 * big_pow(BigInt(2), static_cast<unsigned>(w.size()));
    return ExactSqrt::make(coef, norm2);
}

// Fejer-type kernel with unit mass and support [-delta, delta].
inline double fejer_kernel(double u, double delta) {
    if (!(delta > 0)) throw precondition_error("fejer_kernel: delta must be positive");
    double au = std::fabs(u);
    if (au >= delta) return 0.0;
    return (delta - au) / (delta * delta);
}

}  // namespace biquadric
