#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "biquadric/errors.hpp"

namespace biquadric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline i64 to_i64(const BigInt& v, const char* what = "value") {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw budget_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<i64>(v);
}

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_pow(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline i64 ipow(i64 base, unsigned e) {
    i64 r = 1;
    while (e--) r *= base;
    return r;
}

// Largest t >= 0 with t^k <= n (n >= 0, k >= 1).
inline BigInt integer_kth_root(const BigInt& n, unsigned k) {
    if (n < 0) throw precondition_error("integer_kth_root: negative argument");
    if (n == 0) return 0;
    BigInt lo = 0, hi = 1;
    while (big_pow(hi, k) <= n) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (big_pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

inline i64 isqrt64(i64 n) {
    if (n < 0) throw precondition_error("isqrt64: negative argument");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace biquadric
