#include "doctest.h"

#include "biquadric/integers.hpp"
#include "biquadric/primes.hpp"

using namespace biquadric;

TEST_CASE("integer kth roots are exact floors") {
    CHECK(integer_kth_root(BigInt(1000), 3) == 10);
    CHECK(integer_kth_root(BigInt(999), 3) == 9);
    CHECK(integer_kth_root(BigInt(0), 5) == 0);
    CHECK(integer_kth_root(BigInt("100000000000000000000"), 2) == BigInt(10000000000LL));
    for (i64 n = 1; n <= 2000; ++n)
        for (unsigned k = 1; k <= 4; ++k) {
            BigInt r = integer_kth_root(BigInt(n), k);
            CHECK(big_pow(r, k) <= n);
            CHECK(big_pow(r + 1, k) > n);
        }
}

TEST_CASE("mobius values and the divisor-sum identity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    // sum_{d|n} mu(d) = [n == 1]
    for (i64 n = 1; n <= 10000; ++n) {
        int sum = 0;
        for (i64 d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            sum += mobius(d);
            if (d != n / d) sum += mobius(n / d);
        }
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("factorize and phi") {
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<i64, int>{2, 3});
    CHECK(f[1] == std::pair<i64, int>{3, 2});
    CHECK(f[2] == std::pair<i64, int>{5, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(360) == 96);
    CHECK_THROWS_AS(factorize(0), precondition_error);
}

TEST_CASE("jacobi symbol basics") {
    CHECK(jacobi(1, 3) == 1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(0, 3) == 0);
    // multiplicativity in the top argument, odd prime modulus
    for (i64 p : {3, 5, 7, 11, 13}) {
        for (i64 a = 1; a < p; ++a)
            for (i64 b = 1; b < p; ++b)
                CHECK(jacobi(a * b, p) == jacobi(a, p) * jacobi(b, p));
    }
}
