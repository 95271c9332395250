#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "biquadric/exact_sqrt.hpp"
#include "biquadric/forms.hpp"
#include "biquadric/integers.hpp"
#include "biquadric/parallel.hpp"
#include "biquadric/slice_volume.hpp"

namespace biquadric {

using BigVec = std::vector<BigInt>;
using BigMat = std::vector<BigVec>;  // rows are vectors in Z^s

namespace detail {

struct Egcd {
    BigInt g, u, v;  // u*a + v*b = g >= 0
};

inline Egcd egcd(BigInt a, BigInt b) {
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r, r = tmp;
        tmp = old_s - q * s;
        old_s = s, s = tmp;
        tmp = old_t - q * t;
        old_t = t, t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r, old_s = -old_s, old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

// Nearest integer to a/b, ties toward zero; b > 0.
inline BigInt div_round(const BigInt& a, const BigInt& b) {
    BigInt two_a = 2 * a;
    if (two_a >= 0) return BigInt((two_a + b) / (2 * b));
    return BigInt(-((-two_a + b) / (2 * b)));
}

inline BigInt dot(const BigVec& a, const BigVec& b) {
    BigInt acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Determinant of a positive-definite integer matrix by fraction-free
// (Bareiss) elimination; exact.
inline BigInt bareiss_det(BigMat m) {
    const size_t n = m.size();
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) throw precondition_error("bareiss_det: zero pivot (matrix singular?)");
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n ? m[n - 1][n - 1] : BigInt(1);
}

// A few sweeps of pairwise size reduction; unimodular, keeps the lattice.
inline void size_reduce(BigMat& basis) {
    const size_t k = basis.size();
    std::vector<BigInt> norm2(k);
    auto renorm = [&](size_t i) { norm2[i] = dot(basis[i], basis[i]); };
    for (size_t i = 0; i < k; ++i) renorm(i);
    bool changed = true;
    for (int sweep = 0; sweep < 12 && changed; ++sweep) {
        changed = false;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                if (i == j || norm2[j] == 0) continue;
                BigInt q = div_round(dot(basis[i], basis[j]), norm2[j]);
                if (q == 0) continue;
                for (size_t c = 0; c < basis[i].size(); ++c) basis[i][c] -= q * basis[j][c];
                renorm(i);
                changed = true;
            }
        std::sort(basis.begin(), basis.end(), [&](const BigVec& a, const BigVec& b) {
            return dot(a, a) < dot(b, b);
        });
        for (size_t i = 0; i < k; ++i) renorm(i);
    }
}

}  // namespace detail

// Basis of {x in Z^s : w.x = 0} for integer w != 0, rank s-1, by unimodular
// column operations carrying (w.col_1, ..., w.col_s) to (g, 0, ..., 0).
inline BigMat kernel_basis(const BigVec& w) {
    const size_t s = w.size();
    if (s < 2 || is_zero_vector(w)) throw precondition_error("kernel_basis: need s >= 2, w != 0");
    BigMat cols(s, BigVec(s, 0));
    for (size_t i = 0; i < s; ++i) cols[i][i] = 1;
    BigVec c = w;  // c[i] = w . cols[i]
    for (size_t j = 1; j < s; ++j) {
        if (c[j] == 0) continue;
        auto e = detail::egcd(c[0], c[j]);
        BigInt a0 = c[0] / e.g, aj = c[j] / e.g;
        for (size_t r = 0; r < s; ++r) {
            BigInt n0 = e.u * cols[0][r] + e.v * cols[j][r];
            BigInt nj = -aj * cols[0][r] + a0 * cols[j][r];
            cols[0][r] = n0;
            cols[j][r] = nj;
        }
        c[0] = e.g;
        c[j] = 0;
    }
    BigMat basis;
    for (size_t j = 1; j < s; ++j) basis.push_back(cols[j]);
    detail::size_reduce(basis);
    return basis;
}

struct SolutionLattice {
    BigVec normal;  // (y_1^2, ..., y_s^2); empty for generic test lattices
    BigMat basis;   // rank vectors in Z^s
    BigInt det2;    // exact det(Gram)
    int ambient = 0;
    int rank = 0;

    double det() const { return std::sqrt(to_double(det2)); }
};

// Lattice of x-solutions of F(x; y) = 0 for fixed y != 0.
inline SolutionLattice solution_lattice(const CoeffVector& y) {
    if (y.empty() || is_zero_vector(y)) throw precondition_error("solution_lattice: y must be nonzero");
    SolutionLattice lat;
    lat.ambient = static_cast<int>(y.size());
    lat.normal.reserve(y.size());
    for (const auto& e : y) lat.normal.push_back(e * e);
    lat.basis = kernel_basis(lat.normal);
    lat.rank = static_cast<int>(lat.basis.size());
    BigMat gram(lat.basis.size(), BigVec(lat.basis.size()));
    for (size_t i = 0; i < lat.basis.size(); ++i)
        for (size_t j = 0; j < lat.basis.size(); ++j)
            gram[i][j] = detail::dot(lat.basis[i], lat.basis[j]);
    lat.det2 = detail::bareiss_det(gram);
    return lat;
}

// Test-only injection of an arbitrary integer basis (e.g. Z^k).
inline SolutionLattice lattice_from_basis(BigMat basis, int ambient) {
    SolutionLattice lat;
    lat.ambient = ambient;
    lat.basis = std::move(basis);
    lat.rank = static_cast<int>(lat.basis.size());
    BigMat gram(lat.basis.size(), BigVec(lat.basis.size()));
    for (size_t i = 0; i < lat.basis.size(); ++i)
        for (size_t j = 0; j < lat.basis.size(); ++j)
            gram[i][j] = detail::dot(lat.basis[i], lat.basis[j]);
    lat.det2 = detail::bareiss_det(gram);
    return lat;
}

struct BoxCountOptions {
    bool exclude_zero_coords = false;  // count only points with every x_i != 0
    int threads = 1;
    // Force a path for cross-checking; AUTO picks the cheap one.
    enum class Mode { AUTO, CONVOLUTION, ENUMERATION } mode = Mode::AUTO;
    i64 conv_max_cells = i64(1) << 24;
    i64 enum_max_nodes = i64(1) << 34;
};

namespace detail {

// Exact count of {x in Z^s: |x|_inf <= R, w.x = 0} by convolving the value
// distributions coordinate by coordinate (a meet-in-the-middle where the
// hash of partial sums is a flat array indexed by the value itself).
inline std::optional<i64> convolution_count(const std::vector<i64>& w, i64 R,
                                            bool exclude_zero, i64 max_cells) {
    i64 span = 0;
    i64 multiplier = 1;
    std::vector<i64> active;
    for (i64 wi : w) {
        if (wi == 0) {
            multiplier *= exclude_zero ? 2 * R : 2 * R + 1;
            if (multiplier == 0) return 0;
            continue;
        }
        i64 aw = std::llabs(wi);
        if (aw > (i64(1) << 40) / std::max<i64>(R, 1)) return std::nullopt;
        span += aw * R;
        active.push_back(wi);
    }
    if (2 * span + 1 > max_cells) return std::nullopt;
    if (active.empty()) return multiplier;  // only the all-(free-coordinate) block

    std::vector<i64> dist(static_cast<size_t>(2 * span + 1), 0);
    std::vector<i64> next(dist.size(), 0);
    const i64 off = span;
    dist[static_cast<size_t>(off)] = 1;
    i64 reach = 0;
    for (i64 wi : active) {
        std::fill(next.begin(), next.end(), 0);
        i64 aw = std::llabs(wi);
        for (i64 v = -reach; v <= reach; ++v) {
            i64 cnt = dist[static_cast<size_t>(v + off)];
            if (!cnt) continue;
            for (i64 t = exclude_zero ? 1 : 0; t <= R; ++t) {
                i64 shift = wi * t;
                next[static_cast<size_t>(v + shift + off)] += cnt;
                if (t > 0) next[static_cast<size_t>(v - shift + off)] += cnt;
            }
        }
        reach += aw * R;
        dist.swap(next);
    }
    return multiplier * dist[static_cast<size_t>(off)];
}

struct EnumFrame {
    std::vector<std::vector<i64>> basis;  // basis[i][j], i = level, j = ambient coord
    std::vector<i64> tbound;              // |t_i| <= tbound[i]
    std::vector<std::vector<i64>> slack;  // slack[i][j] = max |sum_{l<=i} b_l t_l| in coord j
    int rank = 0, ambient = 0;
};

// Outer coordinate bounds from the rational pseudo-inverse (G^{-1} B) x.
inline std::vector<Rational> dual_l1_bounds(const BigMat& basis) {
    const size_t k = basis.size(), s = basis[0].size();
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + s));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = Rational(dot(basis[i], basis[j]));
        for (size_t j = 0; j < s; ++j) aug[i][k + j] = Rational(basis[i][j]);
    }
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && aug[piv][col] == 0) ++piv;
        if (piv == k) throw precondition_error("dual_l1_bounds: dependent basis");
        std::swap(aug[col], aug[piv]);
        Rational p = aug[col][col];
        for (auto& v : aug[col]) v /= p;
        for (size_t r = 0; r < k; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (size_t c = col; c < k + s; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    std::vector<Rational> l1(k, 0);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < s; ++j)
            l1[i] += boost::multiprecision::abs(Rational(aug[i][k + j]));
    return l1;
}

inline EnumFrame build_enum_frame(const SolutionLattice& lat, i64 R) {
    EnumFrame f;
    f.rank = lat.rank;
    f.ambient = lat.ambient;
    auto l1 = dual_l1_bounds(lat.basis);
    f.basis.resize(static_cast<size_t>(lat.rank));
    f.tbound.resize(static_cast<size_t>(lat.rank));
    BigInt guard = 0;
    for (int i = 0; i < lat.rank; ++i) {
        Rational b = l1[static_cast<size_t>(i)] * R;
        BigInt tb = boost::multiprecision::numerator(b) / boost::multiprecision::denominator(b);
        f.tbound[static_cast<size_t>(i)] = to_i64(tb, "enumeration bound");
        f.basis[static_cast<size_t>(i)].resize(static_cast<size_t>(lat.ambient));
        for (int j = 0; j < lat.ambient; ++j) {
            f.basis[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                to_i64(lat.basis[static_cast<size_t>(i)][static_cast<size_t>(j)], "basis entry");
            guard += big_abs(lat.basis[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                     (f.tbound[static_cast<size_t>(i)] + 1);
        }
    }
    to_i64(guard, "enumeration partial sums");  // overflow guard for i64 arithmetic below
    f.slack.assign(static_cast<size_t>(f.rank), std::vector<i64>(static_cast<size_t>(f.ambient), 0));
    for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < f.ambient; ++j) {
            f.slack[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                std::llabs(f.basis[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                f.tbound[static_cast<size_t>(i)];
            if (i > 0)
                f.slack[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    f.slack[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        }
    return f;
}

// Recursion over levels rank-1 .. 1; level 0 is counted as an exact interval.
inline i64 enum_count_rec(const EnumFrame& f, int level, std::vector<i64>& partial, i64 R,
                          bool exclude_zero, i64& nodes, i64 max_nodes) {
    if (++nodes > max_nodes) throw budget_error("box enumeration exceeds node budget");
    const auto& b = f.basis[static_cast<size_t>(level)];
    if (level == 0) {
        i64 lo = std::numeric_limits<i64>::min(), hi = std::numeric_limits<i64>::max();
        for (int j = 0; j < f.ambient; ++j) {
            i64 bj = b[static_cast<size_t>(j)], pj = partial[static_cast<size_t>(j)];
            if (bj == 0) {
                if (std::llabs(pj) > R) return 0;
                continue;
            }
            // |pj + t*bj| <= R
            i64 a = -R - pj, c = R - pj;
            i64 l, h;
            if (bj > 0) {
                l = a >= 0 ? (a + bj - 1) / bj : -((-a) / bj);
                h = c >= 0 ? c / bj : -((-c + bj - 1) / bj);
            } else {
                i64 nb = -bj;
                l = (-c) >= 0 ? ((-c) + nb - 1) / nb : -((c) / nb);
                h = (-a) >= 0 ? (-a) / nb : -((a + nb - 1) / nb);
            }
            lo = std::max(lo, l);
            hi = std::min(hi, h);
            if (lo > hi) return 0;
        }
        lo = std::max(lo, -f.tbound[0]);
        hi = std::min(hi, f.tbound[0]);
        if (lo > hi) return 0;
        i64 count = hi - lo + 1;
        if (exclude_zero) {
            std::vector<i64> forbidden;
            for (int j = 0; j < f.ambient; ++j) {
                i64 bj = b[static_cast<size_t>(j)], pj = partial[static_cast<size_t>(j)];
                if (bj == 0) {
                    if (pj == 0) return 0;  // coordinate identically zero on this line
                    continue;
                }
                if (pj % bj == 0) {
                    i64 t = -pj / bj;
                    if (t >= lo && t <= hi) forbidden.push_back(t);
                }
            }
            std::sort(forbidden.begin(), forbidden.end());
            forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
            count -= static_cast<i64>(forbidden.size());
        }
        return count;
    }
    // prune: remaining levels cannot bring coordinate j back within the box
    for (int j = 0; j < f.ambient; ++j)
        if (std::llabs(partial[static_cast<size_t>(j)]) >
            R + f.slack[static_cast<size_t>(level)][static_cast<size_t>(j)])
            return 0;
    i64 total = 0;
    const i64 tb = f.tbound[static_cast<size_t>(level)];
    for (i64 t = -tb; t <= tb; ++t) {
        for (int j = 0; j < f.ambient; ++j)
            partial[static_cast<size_t>(j)] += t == -tb ? -tb * b[static_cast<size_t>(j)]
                                                        : b[static_cast<size_t>(j)];
        total += enum_count_rec(f, level - 1, partial, R, exclude_zero, nodes, max_nodes);
    }
    for (int j = 0; j < f.ambient; ++j)
        partial[static_cast<size_t>(j)] -= tb * b[static_cast<size_t>(j)];
    return total;
}

inline i64 enumeration_count(const SolutionLattice& lat, i64 R, bool exclude_zero, int threads,
                             i64 max_nodes) {
    if (lat.rank == 0) return exclude_zero ? (lat.ambient == 0 ? 1 : 0) : 1;
    EnumFrame f = build_enum_frame(lat, R);
    const int top = f.rank - 1;
    const i64 tb = f.tbound[static_cast<size_t>(top)];
    if (f.rank == 1 || threads <= 1) {
        std::vector<i64> partial(static_cast<size_t>(f.ambient), 0);
        i64 nodes = 0;
        return enum_count_rec(f, top, partial, R, exclude_zero, nodes, max_nodes);
    }
    // shard the outermost lattice coordinate; per-shard results summed in order
    std::vector<i64> shard(static_cast<size_t>(2 * tb + 1), 0);
    parallel_chunks(shard.size(), threads, [&](std::size_t c) {
        i64 t = static_cast<i64>(c) - tb;
        std::vector<i64> partial(static_cast<size_t>(f.ambient));
        for (int j = 0; j < f.ambient; ++j)
            partial[static_cast<size_t>(j)] = t * f.basis[static_cast<size_t>(top)][static_cast<size_t>(j)];
        i64 nodes = 0;
        shard[c] = top == 0 ? 0
                            : enum_count_rec(f, top - 1, partial, R, exclude_zero, nodes,
                                             max_nodes / static_cast<i64>(shard.size()));
    });
    i64 total = 0;
    for (i64 v : shard) total += v;
    return total;
}

}  // namespace detail

// Exact number of lattice points with sup-norm <= R (includes the zero
// vector unless exclude_zero_coords is set).
inline i64 count_lattice_points_box(const SolutionLattice& lat, double R,
                                    const BoxCountOptions& opts = {}) {
    if (R < 0) throw precondition_error("count_lattice_points_box: R must be >= 0");
    i64 Ri = static_cast<i64>(std::floor(R));
    using Mode = BoxCountOptions::Mode;
    if (opts.mode != Mode::ENUMERATION && !lat.normal.empty()) {
        std::vector<i64> w;
        w.reserve(lat.normal.size());
        bool fits = true;
        for (const auto& e : lat.normal) {
            if (e > std::numeric_limits<i64>::max() / std::max<i64>(Ri, 1)) {
                fits = false;
                break;
            }
            w.push_back(static_cast<i64>(e));
        }
        if (fits) {
            double mass = 1.0;
            for (size_t i = 0; i < w.size(); ++i)
                mass *= static_cast<double>(2 * Ri + (opts.exclude_zero_coords ? 0 : 1));
            if (mass < 8e18) {
                auto r =
                    detail::convolution_count(w, Ri, opts.exclude_zero_coords, opts.conv_max_cells);
                if (r) return *r;
            }
        }
        if (opts.mode == Mode::CONVOLUTION)
            throw budget_error("count_lattice_points_box: convolution table exceeds budget");
    }
    return detail::enumeration_count(lat, Ri, opts.exclude_zero_coords, opts.threads,
                                     opts.enum_max_nodes);
}

struct MinimaProfile {
    std::vector<BigInt> minima2;  // exact squared Euclidean successive minima
    std::vector<double> minima;
    BigMat witnesses;
    bool approximate = false;
};

namespace detail {

// Incremental exact rank over Q via fraction-free row elimination.
struct RankTracker {
    BigMat rows;

    bool try_add(BigVec v) {
        for (const auto& r : rows) {
            size_t lead = 0;
            while (lead < r.size() && r[lead] == 0) ++lead;
            if (lead == r.size() || v[lead] == 0) continue;
            BigInt a = v[lead], b = r[lead];
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] * b - r[j] * a;
        }
        if (is_zero_vector(v)) return false;
        // rows stay sorted by leading index, so one sweep fully reduces
        rows.push_back(std::move(v));
        std::sort(rows.begin(), rows.end(), [](const BigVec& a, const BigVec& b) {
            size_t la = 0, lb = 0;
            while (la < a.size() && a[la] == 0) ++la;
            while (lb < b.size() && b[lb] == 0) ++lb;
            return la < lb;
        });
        return true;
    }
};

inline void enum_points_rec(const EnumFrame& f, int level, std::vector<i64>& partial,
                            std::vector<i64>& t, i64 R, i64& nodes, i64 max_nodes,
                            const std::function<void(const std::vector<i64>&)>& emit) {
    if (++nodes > max_nodes) throw budget_error("point enumeration exceeds node budget");
    const auto& b = f.basis[static_cast<size_t>(level)];
    for (int j = 0; j < f.ambient; ++j)
        if (std::llabs(partial[static_cast<size_t>(j)]) >
            R + f.slack[static_cast<size_t>(level)][static_cast<size_t>(j)])
            return;
    const i64 tb = f.tbound[static_cast<size_t>(level)];
    for (i64 ti = -tb; ti <= tb; ++ti) {
        for (int j = 0; j < f.ambient; ++j)
            partial[static_cast<size_t>(j)] += ti == -tb ? -tb * b[static_cast<size_t>(j)]
                                                         : b[static_cast<size_t>(j)];
        t[static_cast<size_t>(level)] = ti;
        if (level == 0) {
            bool inside = true;
            for (int j = 0; j < f.ambient && inside; ++j)
                inside = std::llabs(partial[static_cast<size_t>(j)]) <= R;
            if (inside) emit(partial);
        } else {
            enum_points_rec(f, level - 1, partial, t, R, nodes, max_nodes, emit);
        }
    }
    for (int j = 0; j < f.ambient; ++j)
        partial[static_cast<size_t>(j)] -= tb * b[static_cast<size_t>(j)];
}

}  // namespace detail

// Visits every lattice point with sup-norm <= R (including 0) exactly once.
inline void enumerate_lattice_points(const SolutionLattice& lat, i64 R,
                                     const std::function<void(const std::vector<i64>&)>& emit,
                                     i64 max_nodes = i64(1) << 32) {
    if (lat.rank == 0) {
        emit(std::vector<i64>(static_cast<size_t>(lat.ambient), 0));
        return;
    }
    detail::EnumFrame f = detail::build_enum_frame(lat, R);
    std::vector<i64> partial(static_cast<size_t>(f.ambient), 0), t(static_cast<size_t>(f.rank), 0);
    i64 nodes = 0;
    detail::enum_points_rec(f, f.rank - 1, partial, t, R, nodes, max_nodes, emit);
}

// Exact Euclidean successive minima by exhaustive search inside a doubling
// Minkowski radius; falls back to the size-reduced basis (flagged) if the
// search space explodes.
inline MinimaProfile successive_minima(const SolutionLattice& lat, i64 max_nodes = i64(1) << 23) {
    if (lat.rank == 0) throw precondition_error("successive_minima: rank 0 lattice");
    if (lat.rank > 8) throw precondition_error("successive_minima: rank above desk scale");
    const int k = lat.rank;
    double radius = 2.0 * std::sqrt(static_cast<double>(k)) *
                    std::pow(to_double(lat.det2), 1.0 / (2.0 * k));
    for (int attempt = 0; attempt < 12; ++attempt, radius *= 2) {
        i64 R = static_cast<i64>(std::ceil(radius));
        BigInt r2_limit = BigInt(R) * BigInt(R);
        std::vector<std::pair<BigInt, std::vector<i64>>> cands;
        bool blown = false;
        try {
            enumerate_lattice_points(lat, R, [&](const std::vector<i64>& x) {
                BigInt n2 = 0;
                for (i64 c : x) n2 += BigInt(c) * c;
                if (n2 != 0 && n2 <= r2_limit) cands.emplace_back(n2, x);
            }, max_nodes);
        } catch (const budget_error&) {
            blown = true;
        }
        if (blown) break;
        std::sort(cands.begin(), cands.end());
        detail::RankTracker tracker;
        MinimaProfile out;
        for (const auto& [n2, x] : cands) {
            BigVec v(x.begin(), x.end());
            if (tracker.try_add(v)) {
                out.minima2.push_back(n2);
                out.minima.push_back(std::sqrt(to_double(n2)));
                out.witnesses.push_back(v);
                if (static_cast<int>(out.minima2.size()) == k) return out;
            }
        }
        // not enough independent vectors in this radius; grow and retry
    }
    MinimaProfile approx;
    approx.approximate = true;
    BigMat sorted = lat.basis;
    std::sort(sorted.begin(), sorted.end(), [](const BigVec& a, const BigVec& b) {
        return detail::dot(a, a) < detail::dot(b, b);
    });
    for (const auto& v : sorted) {
        BigInt n2 = detail::dot(v, v);
        approx.minima2.push_back(n2);
        approx.minima.push_back(std::sqrt(to_double(n2)));
        approx.witnesses.push_back(v);
    }
    return approx;
}

struct SchmidtReport {
    i64 count = 0;
    double main_term = 0;
    double error = 0;
    double envelope = 0;  // 1 + sum_{j<k} R^{k-j} / (l_1 ... l_j)
};

// Compares the exact box count against (V/det) R^rank with the lattice-point
// remainder envelope evaluated from the computed minima.
inline SchmidtReport check_schmidt_bound(const SolutionLattice& lat, double R,
                                         const BoxCountOptions& opts = {}) {
    if (!(R > 0)) throw precondition_error("check_schmidt_bound: R must be positive");
    SchmidtReport rep;
    rep.count = count_lattice_points_box(lat, R, opts);
    double vol_over_det;
    if (!lat.normal.empty() && lat.rank == lat.ambient - 1) {
        vol_over_det = cube_slice_volume(lat.normal).value() / lat.det();
    } else if (lat.rank == lat.ambient) {
        vol_over_det = std::pow(2.0, lat.rank) / lat.det();
    } else {
        throw precondition_error("check_schmidt_bound: unsupported lattice geometry");
    }
    rep.main_term = vol_over_det * std::pow(R, lat.rank);
    rep.error = static_cast<double>(rep.count) - rep.main_term;
    MinimaProfile mp = successive_minima(lat);
    rep.envelope = 1.0;
    double prod = 1.0;
    for (int j = 1; j <= lat.rank - 1; ++j) {
        prod *= mp.minima[static_cast<size_t>(j - 1)];
        rep.envelope += std::pow(R, lat.rank - j) / prod;
    }
    return rep;
}

}  // namespace biquadric
