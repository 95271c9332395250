#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "biquadric/forms.hpp"
#include "biquadric/fresnel.hpp"
#include "biquadric/parallel.hpp"
#include "biquadric/quadrature.hpp"
#include "biquadric/rng.hpp"
#include "biquadric/slice_volume.hpp"
#include "biquadric/summation.hpp"

namespace biquadric {

struct DensityValue {
    double value = 0;
    enum class Method { EXACT_RATIONAL, QUADRATURE, MONTE_CARLO } method = Method::QUADRATURE;
    double err = 0;  // QUADRATURE: bound; MONTE_CARLO: one standard error (+ bias bound)
    std::string meta;
    std::optional<Rational> exact;

    const char* method_name() const {
        switch (method) {
            case Method::EXACT_RATIONAL: return "exact-rational";
            case Method::QUADRATURE: return "quadrature";
            default: return "monte-carlo";
        }
    }
};

// ---------------------------------------------------------------------------
// rho: density of x-solutions in the unit box for fixed y.
//
// rho(y) = V(y)/det = 2^s f(0) with f the density of sum y_i^2 U_i at zero;
// the sqrt(sum y_i^4) factors of slice volume and determinant cancel exactly,
// so the value is rational.
// ---------------------------------------------------------------------------

inline Rational rho_infinity_exact(const CoeffVector& y) {
    if (y.empty() || is_zero_vector(y)) throw precondition_error("rho_infinity: y must be nonzero");
    std::vector<BigInt> w;
    w.reserve(y.size());
    for (const auto& e : y) w.push_back(e * e);
    return slice_density_at_zero(w) * big_pow(BigInt(2), static_cast<unsigned>(y.size()));
}

inline DensityValue rho_infinity(const CoeffVector& y) {
    DensityValue out;
    out.exact = rho_infinity_exact(y);
    out.value = to_double(*out.exact);
    out.method = DensityValue::Method::EXACT_RATIONAL;
    out.err = 0;
    return out;
}

inline double rho_infinity_real(const std::vector<double>& y) {
    std::vector<double> w;
    w.reserve(y.size());
    for (double e : y) w.push_back(e * e);
    return slice_density_at_zero(w) * std::pow(2.0, static_cast<double>(y.size()));
}

// ---------------------------------------------------------------------------
// sigma: density of y-solutions in the unit box for fixed x, evaluated as
// the theta-integral of prod_j I(theta x_j).
// ---------------------------------------------------------------------------

namespace detail {

// 2 * integral over |theta| > Theta of prod_j min(2, |theta x_j|^{-1/2}),
// exact piecewise evaluation. Valid cutoff bound for any Theta > 0.
inline double sigma_tail_majorant(const std::vector<double>& absx, double Theta) {
    const size_t s = absx.size();
    std::vector<double> breaks;  // factor j decays for theta >= 1/(4|x_j|)
    for (double a : absx) breaks.push_back(1.0 / (4.0 * a));
    std::sort(breaks.begin(), breaks.end());
    double total = 0;
    double seg_start = Theta;
    for (size_t idx = 0; idx <= s; ++idx) {
        // on [seg_start, seg_end): factors with break <= seg_start decay
        double seg_end = idx < s ? breaks[idx] : std::numeric_limits<double>::infinity();
        if (seg_end <= seg_start) continue;
        size_t decaying = 0;
        double coef = 1;
        for (size_t j = 0; j < s; ++j) {
            if (breaks[j] <= seg_start * (1 + 1e-12)) {
                coef /= std::sqrt(absx[j]);
                ++decaying;
            } else {
                coef *= 2;
            }
        }
        double k = static_cast<double>(decaying) / 2.0;
        double piece;
        if (std::isinf(seg_end)) {
            if (k <= 1.0) return std::numeric_limits<double>::infinity();
            piece = coef * std::pow(seg_start, 1.0 - k) / (k - 1.0);
        } else if (std::fabs(k - 1.0) < 1e-12) {
            piece = coef * std::log(seg_end / seg_start);
        } else {
            piece = coef / (1.0 - k) *
                    (std::pow(seg_end, 1.0 - k) - std::pow(seg_start, 1.0 - k));
        }
        total += piece;
        seg_start = seg_end;
    }
    return 2.0 * total;
}

struct SigmaResult {
    double value;
    double err;
    double theta_max;
    long long evals;
    bool exact_zero;
};

inline SigmaResult sigma_infinity_real(const std::vector<double>& x,
                                       const QuadratureSettings& settings) {
    const size_t s = x.size();
    if (s < 5) throw precondition_error("sigma_infinity: needs s >= 5 for absolute convergence");
    bool pos = true, neg = true;
    for (double e : x) {
        if (e == 0 || !std::isfinite(e))
            throw precondition_error("sigma_infinity: coefficients must be nonzero");
        pos = pos && e > 0;
        neg = neg && e < 0;
    }
    if (pos || neg) return {0.0, 0.0, 0.0, 0, true};  // definite form: no real zeros off 0

    std::vector<double> absx;
    for (double e : x) absx.push_back(std::fabs(e));
    const double tail_budget = settings.abs_tol / 2;
    double theta = 1.0;
    while (sigma_tail_majorant(absx, theta) > tail_budget) {
        theta *= 1.5;
        if (theta > 1e14) throw budget_error("sigma_infinity: theta cutoff exceeds budget");
    }

    double freq = 0;
    for (double a : absx) freq += a;
    auto integrand = [&x](double theta_v) {
        std::complex<double> prod(1.0, 0.0);
        for (double xj : x) prod *= fresnel_I(theta_v * xj);
        return prod.real();
    };
    QuadratureSettings inner = settings;
    inner.abs_tol = settings.abs_tol / 4;  // doubled below
    auto est = integrate_oscillatory(integrand, 0.0, theta, freq, inner);
    double tail = sigma_tail_majorant(absx, theta);
    return {2.0 * est.value, 2.0 * est.err + tail, theta, est.evals, false};
}

}  // namespace detail

inline DensityValue sigma_infinity(const CoeffVector& x, const QuadratureSettings& settings = {}) {
    auto profile = delta_profile(x);
    if (profile.degenerate)
        throw precondition_error("sigma_infinity: degenerate coefficients (some x_j = 0)");
    std::vector<double> xd;
    for (const auto& e : x) xd.push_back(to_double(e));
    auto r = detail::sigma_infinity_real(xd, settings);
    DensityValue out;
    out.value = r.value;
    out.err = r.err;
    if (r.exact_zero) {
        out.method = DensityValue::Method::EXACT_RATIONAL;
        out.exact = Rational(0);
        out.meta = "definite form";
    } else {
        out.method = DensityValue::Method::QUADRATURE;
        std::ostringstream meta;
        meta << "theta_max=" << r.theta_max << ";evals=" << r.evals
             << ";abs_tol=" << settings.abs_tol;
        out.meta = meta.str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// tau: the global constant integral over both unit boxes and theta, computed
// two independent ways:
//   A. Monte Carlo over x of sigma(x), each sample by theta-quadrature;
//   B. Monte Carlo over y of rho(y), each sample an exact corner sum.
// ---------------------------------------------------------------------------

struct TauSettings {
    u64 seed = 1729;
    long long samples_a = 40000;
    long long samples_b = 4000000;
    double point_tol_a = 2e-3;
    int shards = 512;
    int threads = 0;  // 0: resolve from env/hardware
};

struct TauEstimates {
    DensityValue method_a;  // sigma side
    DensityValue method_b;  // rho side
};

namespace detail {

template <typename PerSample>
DensityValue mc_over_cube(int s, u64 seed, long long samples, int shards, int threads,
                          const char* tag, PerSample&& per_sample) {
    shards = std::max(1, shards);
    std::vector<MeanAccumulator> acc(static_cast<size_t>(shards));
    std::vector<CompensatedSum> bias(static_cast<size_t>(shards));
    long long per_shard = (samples + shards - 1) / shards;
    parallel_chunks(static_cast<size_t>(shards), resolve_thread_count(threads), [&](std::size_t c) {
        Rng rng(shard_seed(seed, static_cast<u64>(c)));
        std::vector<double> point(static_cast<size_t>(s));
        for (long long i = 0; i < per_shard; ++i) {
            for (auto& e : point) e = rng.uniform_sym();
            auto [v, b] = per_sample(point);
            acc[c].add(v);
            bias[c].add(b);
        }
    });
    MeanAccumulator total;
    CompensatedSum total_bias;
    for (int c = 0; c < shards; ++c) {
        total.add(acc[static_cast<size_t>(c)]);
        total_bias.add(bias[static_cast<size_t>(c)]);
    }
    double scale = std::pow(2.0, s);  // cube volume
    DensityValue out;
    out.value = total.mean() * scale;
    out.method = DensityValue::Method::MONTE_CARLO;
    double bias_bound = total_bias.value() / static_cast<double>(total.n) * scale;
    out.err = total.sem() * scale + bias_bound;
    std::ostringstream meta;
    meta << tag << ";samples=" << total.n << ";seed=" << seed << ";sem=" << total.sem() * scale
         << ";bias_bound=" << bias_bound;
    out.meta = meta.str();
    return out;
}

}  // namespace detail

inline TauEstimates tau_infinity(int s, const TauSettings& ts = {}) {
    if (s < 5) throw precondition_error("tau_infinity: needs s >= 5");
    TauEstimates out;
    QuadratureSettings qs;
    qs.abs_tol = ts.point_tol_a;
    out.method_a = detail::mc_over_cube(
        s, ts.seed ^ 0xA11CE, ts.samples_a, ts.shards, ts.threads, "sigma-side",
        [&](const std::vector<double>& x) -> std::pair<double, double> {
            for (double e : x)
                if (e == 0) return {0.0, 0.0};  // measure-zero guard
            auto r = detail::sigma_infinity_real(x, qs);
            return {r.value, r.err};
        });
    out.method_b = detail::mc_over_cube(
        s, ts.seed ^ 0xB0B, ts.samples_b, ts.shards, ts.threads, "rho-side",
        [&](const std::vector<double>& y) -> std::pair<double, double> {
            for (double e : y)
                if (e == 0) return {0.0, 0.0};
            return {rho_infinity_real(y), 0.0};
        });
    return out;
}

// ---------------------------------------------------------------------------
// Shell integrals of the two densities against their height weights. The
// closed forms follow from the homogeneity rho(ky) = k^-2 rho(y) and
// sigma(kx) = k^-1 sigma(x):
//   J(rho side)   = (s-2) tau log(U/L),
//   J(sigma side) = (s-1) tau log(U/L).
// Sampling is radial log-uniform times a uniform point on the sup-norm
// sphere (importance choice only; the estimator is generic).
// ---------------------------------------------------------------------------

struct ShellIntegralSettings {
    u64 seed = 315;
    long long samples = 200000;
    double point_tol = 1e-3;  // per-point sigma quadrature tolerance
    double eta = 0.001;       // lower-edge exponent for the sigma-side shell
    int shards = 256;
    int threads = 0;
};

struct ShellIntegralReport {
    DensityValue numeric;
    double closed_form = 0;
    double ratio = 0;
    double lower = 0, upper = 0;
};

enum class ShellSide { RHO, SIGMA };  // J2 and J1 respectively

inline ShellIntegralReport j_integral(ShellSide side, int s, double B, double k, double tau,
                                      const ShellIntegralSettings& st = {}) {
    if (B <= 1 || k < 1) throw precondition_error("j_integral: need B > 1, k >= 1");
    double L, U;
    if (side == ShellSide::RHO) {
        L = 1.0;
        U = std::pow(B, 1.0 / (s + 2)) / k;
    } else {
        U = std::pow(B, 4.0 / ((s + 2) * (s - 1))) / k;
        L = std::max(1.0, std::pow(B, 3.0 * s * st.eta) / k);
    }
    ShellIntegralReport rep;
    rep.lower = L;
    rep.upper = U;
    if (U < L) throw precondition_error("j_integral: empty shell");
    double weight_exp = side == ShellSide::RHO ? (s - 2) : (s - 1);
    rep.closed_form = weight_exp * tau * std::log(U / L);
    if (U / L < 1.0 + 1e-12) {
        rep.numeric = DensityValue{0.0, DensityValue::Method::MONTE_CARLO, 0.0, "degenerate shell", {}};
        rep.ratio = 1.0;
        return rep;
    }

    QuadratureSettings qs;
    qs.abs_tol = st.point_tol;
    double log_ratio = std::log(U / L);
    int shards = std::max(1, st.shards);
    std::vector<MeanAccumulator> acc(static_cast<size_t>(shards));
    std::vector<CompensatedSum> bias(static_cast<size_t>(shards));
    long long per_shard = (st.samples + shards - 1) / shards;
    double cone_mass = 2.0 * s * std::pow(2.0, s - 1);  // surface area of the sup-sphere
    parallel_chunks(static_cast<size_t>(shards), resolve_thread_count(st.threads), [&](std::size_t c) {
        Rng rng(shard_seed(st.seed, static_cast<u64>(c)));
        std::vector<double> v(static_cast<size_t>(s));
        for (long long i = 0; i < per_shard; ++i) {
            double r = L * std::exp(log_ratio * rng.uniform01());
            u64 fc = rng.below(static_cast<u64>(2 * s));
            for (auto& e : v) e = rng.uniform_sym();
            v[fc >> 1] = (fc & 1) ? -1.0 : 1.0;
            bool has_zero = false;
            for (auto& e : v) {
                e *= r;
                if (e == 0.0) has_zero = true;
            }
            if (has_zero) {
                acc[c].add(0.0);
                bias[c].add(0.0);
                continue;
            }
            double density, density_err = 0;
            if (side == ShellSide::RHO) {
                density = rho_infinity_real(v);
            } else {
                auto sr = detail::sigma_infinity_real(v, qs);
                density = sr.value;
                density_err = sr.err;
            }
            // integrand density/r^{weight_exp}; importance weight r^{s-1} * cone / p(r)
            double w = std::pow(r, static_cast<double>(s) - weight_exp) * log_ratio * cone_mass;
            acc[c].add(density * w);
            bias[c].add(density_err * w);
        }
    });
    MeanAccumulator total;
    CompensatedSum total_bias;
    for (int c = 0; c < shards; ++c) {
        total.add(acc[static_cast<size_t>(c)]);
        total_bias.add(bias[static_cast<size_t>(c)]);
    }
    rep.numeric.value = total.mean();
    rep.numeric.method = DensityValue::Method::MONTE_CARLO;
    rep.numeric.err = total.sem() + total_bias.value() / static_cast<double>(total.n);
    std::ostringstream meta;
    meta << "samples=" << total.n << ";seed=" << st.seed << ";L=" << L << ";U=" << U;
    rep.numeric.meta = meta.str();
    rep.ratio = rep.closed_form != 0 ? rep.numeric.value / rep.closed_form : 0.0;
    return rep;
}

}  // namespace biquadric
