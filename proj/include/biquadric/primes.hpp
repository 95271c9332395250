#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "biquadric/integers.hpp"

namespace biquadric {

// Factorization of 64-bit integers by trial division. Desk-scale inputs
// (coefficient products, moduli q <= 1e6, discriminants) stay far below the
// point where Pollard rho would be worth the extra code.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 0) n = -n;
    if (n == 0) throw precondition_error("factorize: zero argument");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int mobius(i64 n) {
    if (n <= 0) throw precondition_error("mobius: argument must be >= 1");
    if (n == 1) return 1;
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e >= 2) return 0;
        sign = -sign;
        (void)p;
    }
    return sign;
}

inline i64 euler_phi(i64 n) {
    i64 phi = n;
    for (auto [p, e] : factorize(n)) {
        phi -= phi / p;
        (void)e;
    }
    return phi;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

inline std::vector<i64> primes_up_to(i64 n) {
    std::vector<bool> sieve(static_cast<size_t>(std::max<i64>(n + 1, 2)), true);
    sieve[0] = sieve[1] = false;
    for (i64 p = 2; p * p <= n; ++p)
        if (sieve[static_cast<size_t>(p)])
            for (i64 m = p * p; m <= n; m += p) sieve[static_cast<size_t>(m)] = false;
    std::vector<i64> out;
    for (i64 p = 2; p <= n; ++p)
        if (sieve[static_cast<size_t>(p)]) out.push_back(p);
    return out;
}

// Smallest-prime-factor table for fast repeated factorization of q <= n.
inline std::vector<int> spf_table(int n) {
    std::vector<int> spf(static_cast<size_t>(n) + 1, 0);
    for (int i = 2; i <= n; ++i) {
        if (spf[static_cast<size_t>(i)]) continue;
        for (long long m = i; m <= n; m += i)
            if (!spf[static_cast<size_t>(m)]) spf[static_cast<size_t>(m)] = i;
    }
    return spf;
}

// Jacobi symbol (a|n) for odd n >= 1.
inline int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw precondition_error("jacobi: modulus must be odd positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace biquadric
