#pragma once

#include <cmath>

namespace biquadric {

// Neumaier compensated accumulator; order-sensitive rounding stays below
// a few ulps even across 1e8-term reductions.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    void add(const CompensatedSum& o) {
        add(o.sum);
        comp += o.comp;
    }

    double value() const { return sum + comp; }
};

struct MeanAccumulator {
    CompensatedSum sx, sxx;
    long long n = 0;

    void add(double v) {
        sx.add(v);
        sxx.add(v * v);
        ++n;
    }

    void add(const MeanAccumulator& o) {
        sx.add(o.sx);
        sxx.add(o.sxx);
        n += o.n;
    }

    double mean() const { return n ? sx.value() / static_cast<double>(n) : 0.0; }

    // Standard error of the mean.
    double sem() const {
        if (n < 2) return 0.0;
        double m = mean();
        double var = sxx.value() / static_cast<double>(n) - m * m;
        if (var < 0) var = 0;
        return std::sqrt(var / static_cast<double>(n - 1));
    }
};

}  // namespace biquadric
