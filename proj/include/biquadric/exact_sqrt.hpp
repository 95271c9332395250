#pragma once

#include <cmath>

#include "biquadric/integers.hpp"
#include "biquadric/primes.hpp"

namespace biquadric {

// Exact value of the form coef * sqrt(disc) with coef rational and disc a
// positive integer. Canonical form keeps disc squarefree (square part folded
// into coef), so two values are equal iff their fields are equal.
struct ExactSqrt {
    Rational coef = 0;
    BigInt disc = 1;

    static ExactSqrt make(Rational coef, BigInt disc) {
        if (disc <= 0) throw precondition_error("ExactSqrt: discriminant must be positive");
        if (coef == 0) return ExactSqrt{0, 1};
        BigInt square_free = 1, root = 1;
        for (auto [p, e] : factorize(to_i64(disc, "discriminant"))) {
            if (e & 1) square_free *= p;
            root *= big_pow(BigInt(p), static_cast<unsigned>(e / 2));
        }
        return ExactSqrt{coef * root, square_free};
    }

    bool operator==(const ExactSqrt& o) const { return coef == o.coef && disc == o.disc; }

    double value() const { return to_double(coef) * std::sqrt(to_double(disc)); }
};

}  // namespace biquadric
