#pragma once

#include <cmath>
#include <functional>

#include "biquadric/errors.hpp"
#include "biquadric/summation.hpp"

namespace biquadric {

struct QuadratureSettings {
    double abs_tol = 1e-8;
    int max_subdivisions = 48;   // recursion depth per panel
    double panel_scale = 1.0;    // target panel length in units of 1/frequency
};

struct IntegralEstimate {
    double value = 0;
    double err = 0;       // accumulated error estimate
    long long evals = 0;  // integrand evaluations
};

namespace detail {

struct SimpsonCtx {
    const std::function<double(double)>* f;
    int max_depth;
    long long evals = 0;
    double err = 0;
};

inline double simpson_rec(SimpsonCtx& ctx, double a, double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = (*ctx.f)(lm), frm = (*ctx.f)(rm);
    ctx.evals += 2;
    double h = b - a;
    double left = h / 12.0 * (fa + 4 * flm + fm);
    double right = h / 12.0 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth >= ctx.max_depth || std::fabs(delta) <= 15.0 * tol) {
        ctx.err += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_rec(ctx, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           simpson_rec(ctx, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

}  // namespace detail

inline IntegralEstimate adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                         double abs_tol, int max_depth = 48) {
    detail::SimpsonCtx ctx{&f, max_depth};
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    ctx.evals = 3;
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double v = detail::simpson_rec(ctx, a, b, fa, fm, fb, whole, abs_tol, 0);
    return {v, ctx.err, ctx.evals};
}

// Integrates an oscillatory integrand over [a, b]: the interval is pre-split
// into panels no longer than panel_scale / frequency so adaptivity starts
// below the oscillation wavelength, then each panel is refined independently
// with a proportional share of the error budget.
inline IntegralEstimate integrate_oscillatory(const std::function<double(double)>& f, double a,
                                              double b, double frequency,
                                              const QuadratureSettings& settings) {
    if (!(b > a)) return {0, 0, 0};
    double panel_len = settings.panel_scale / std::max(frequency, 1.0);
    long long n_panels = std::max<long long>(1, static_cast<long long>(std::ceil((b - a) / panel_len)));
    if (n_panels > 50'000'000) throw budget_error("integrate_oscillatory: too many panels");
    CompensatedSum total;
    IntegralEstimate out;
    double tol_per_panel = settings.abs_tol / static_cast<double>(n_panels);
    for (long long i = 0; i < n_panels; ++i) {
        double x0 = a + (b - a) * static_cast<double>(i) / static_cast<double>(n_panels);
        double x1 = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(n_panels);
        auto est = adaptive_simpson(f, x0, x1, tol_per_panel, settings.max_subdivisions);
        total.add(est.value);
        out.err += est.err;
        out.evals += est.evals;
    }
    out.value = total.value();
    return out;
}

}  // namespace biquadric
