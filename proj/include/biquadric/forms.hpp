#pragma once

#include <map>
#include <vector>

#include "biquadric/integers.hpp"
#include "biquadric/primes.hpp"

namespace biquadric {

// Integer coefficient/point vector. Entries are arbitrary precision; the
// fast counters convert to 64-bit views after explicit range checks.
using CoeffVector = std::vector<BigInt>;

struct HeightContext {
    int s = 7;        // dimension (>= 2; the main theorems need >= 7)
    double B = 1.0;   // height bound
    HeightContext() = default;
    HeightContext(int s_, double B_) : s(s_), B(B_) {
        if (s < 2) throw precondition_error("HeightContext: s must be >= 2");
        if (!(B > 0)) throw precondition_error("HeightContext: B must be > 0");
    }
};

inline void check_same_dim(const CoeffVector& x, const CoeffVector& y) {
    if (x.size() != y.size() || x.empty())
        throw precondition_error("coefficient vectors must have equal nonzero dimension");
}

inline bool is_zero_vector(const CoeffVector& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

inline BigInt sup_norm(const CoeffVector& v) {
    BigInt m = 0;
    for (const auto& e : v) m = std::max(m, big_abs(e));
    return m;
}

// F(x; y) = x_1 y_1^2 + ... + x_s y_s^2, exact.
inline BigInt evaluate_form(const CoeffVector& x, const CoeffVector& y) {
    check_same_dim(x, y);
    BigInt acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i] * y[i];
    return acc;
}

// Anticanonical height |x|^{s-1} |y|^{s-2} in sup-norms; exact integer.
inline BigInt height(const CoeffVector& x, const CoeffVector& y, const HeightContext& ctx) {
    check_same_dim(x, y);
    if (static_cast<int>(x.size()) != ctx.s)
        throw precondition_error("height: vector dimension differs from context");
    if (is_zero_vector(x) || is_zero_vector(y))
        throw precondition_error("height: zero vector has no projective height");
    return big_pow(sup_norm(x), static_cast<unsigned>(ctx.s - 1)) *
           big_pow(sup_norm(y), static_cast<unsigned>(ctx.s - 2));
}

// gcd of all entries is 1; the zero vector is not primitive.
inline bool is_primitive(const CoeffVector& v) {
    BigInt g = 0;
    for (const auto& e : v) {
        g = big_gcd(g, big_abs(e));
        if (g == 1) return true;
    }
    return g == 1;
}

struct DeltaProfile {
    BigInt delta = 0;      // product of the coefficients
    BigInt delta_bad = 1;  // product of p^{v_p(delta)} over primes with v_p(delta) >= 2
    bool degenerate = false;  // delta == 0
};

// Factors each coefficient separately (64-bit each), never the product.
inline DeltaProfile delta_profile(const CoeffVector& x) {
    if (x.empty()) throw precondition_error("delta_profile: empty vector");
    DeltaProfile out;
    out.delta = 1;
    std::map<i64, int> exponents;
    for (const auto& e : x) {
        if (e == 0) return DeltaProfile{0, 1, true};
        out.delta *= e;
        for (auto [p, k] : factorize(to_i64(e, "coefficient"))) exponents[p] += k;
    }
    for (auto [p, k] : exponents)
        if (k >= 2) out.delta_bad *= big_pow(BigInt(p), static_cast<unsigned>(k));
    return out;
}

inline CoeffVector make_vector(std::initializer_list<long long> entries) {
    CoeffVector v;
    for (long long e : entries) v.emplace_back(e);
    return v;
}

inline std::vector<i64> to_i64_vector(const CoeffVector& v, const char* what = "entry") {
    std::vector<i64> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(to_i64(e, what));
    return out;
}

inline CoeffVector from_i64_vector(const std::vector<i64>& v) {
    CoeffVector out;
    out.reserve(v.size());
    for (i64 e : v) out.emplace_back(e);
    return out;
}

}  // namespace biquadric
