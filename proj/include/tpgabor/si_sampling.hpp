#pragma once

// Sampling in V_Y(g) = { sum_k c_k g(. - y_k) } for a totally positive g of
// finite type M >= 2: admissibility of a sampling set X under condition
// C_r(eps), a banded left-inverse Gamma of P = [g(x_j - y_k)] built from
// eps-separated selections, coefficient recovery c = Gamma f|_X, and Riesz
// bounds of the generator.

#include "tpgabor/banded_matrix.hpp"
#include "tpgabor/detail/parallel.hpp"
#include "tpgabor/error.hpp"
#include "tpgabor/gabor_frames.hpp"
#include "tpgabor/io.hpp"
#include "tpgabor/point_sequence.hpp"
#include "tpgabor/tp_kernel.hpp"
#include "tpgabor/tp_linalg.hpp"

#include <boost/math/tools/minima.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tpgabor {

/// r and eps of condition C_r(eps). X' is always the greedy eps-separated
/// subsequence of X (see separated_subsequence).
struct SamplingConfig {
    int r = 1;
    double epsilon = 0.0;
};

/// (q, Q): smallest and largest consecutive gap.
inline std::pair<double, double> quasi_uniform_params(std::span<const double> y)
{
    if (y.size() < 2)
        fail(ErrorCode::EmptyWindow, "at least two points are needed for gaps");
    double q = std::numeric_limits<double>::infinity(), Q = 0.0;
    for (std::size_t i = 1; i < y.size(); ++i) {
        const double gap = y[i] - y[i - 1];
        if (!(gap > 0.0))
            fail(ErrorCode::NonIncreasingSequence, "points are not strictly increasing at position " + std::to_string(i));
        q = std::min(q, gap);
        Q = std::max(Q, gap);
    }
    return {q, Q};
}

inline std::pair<double, double> quasi_uniform_params(const PointSequence& Y)
{
    if (Y.is_uniform())
        return {Y.step(), Y.step()};
    return quasi_uniform_params(Y.values());
}

/// Flags over X's window: keep x_j when it is at least eps to the right of the
/// last kept point.
inline std::vector<char> separated_subsequence(const PointSequence& X, double eps)
{
    std::vector<char> keep(X.size(), 0);
    double last = -std::numeric_limits<double>::infinity();
    for (Index j = X.lo(); j <= X.hi(); ++j)
        if (X[j] - last >= eps) {
            keep[static_cast<std::size_t>(j - X.lo())] = 1;
            last = X[j];
        }
    return keep;
}

namespace detail {

// X's realized window reaches over [a, b]
inline bool window_covers(const PointSequence& X, double a, double b)
{
    return X[X.lo()] <= a && X[X.hi()] >= b;
}

inline Index count_flagged(const PointSequence& X, const std::vector<char>& flags, double a, double b)
{
    if (!(b > a))
        return 0;
    const Index first = std::max(X.lo(), X.first_above(a));
    const Index last = std::min(X.hi(), X.last_below(b));
    Index count = 0;
    for (Index j = first; j <= last; ++j)
        count += flags[static_cast<std::size_t>(j - X.lo())] ? 1 : 0;
    return count;
}

} // namespace detail

/// C_r(eps) for X' = separated_subsequence(X, eps): (a) every
/// (y_k + eps, y_{k+1} - eps) meets X' and (b) every (y_k + eps, y_{k+r} - eps)
/// holds at least r + 1 points of X', over the intervals X's window reaches.
/// False when eps is outside (0, q_Y / 2), r < 1, or no interval is examined.
inline bool condition_Cr_eps(const PointSequence& X, const PointSequence& Y, const SamplingConfig& cfg)
{
    const double eps = cfg.epsilon;
    if (cfg.r < 1 || !(eps > 0.0) || !(eps < 0.5 * quasi_uniform_params(Y).first))
        return false;
    const auto flags = separated_subsequence(X, eps);
    bool examined = false;
    for (Index k = Y.lo(); k < Y.hi(); ++k) {
        if (!detail::window_covers(X, Y[k], Y[k + 1]))
            continue;
        examined = true;
        if (detail::count_flagged(X, flags, Y[k] + eps, Y[k + 1] - eps) < 1)
            return false;
    }
    for (Index k = Y.lo(); k + cfg.r <= Y.hi(); ++k) {
        if (!detail::window_covers(X, Y[k], Y[k + cfg.r]))
            continue;
        if (detail::count_flagged(X, flags, Y[k] + eps, Y[k + cfg.r] - eps) < cfg.r + 1)
            return false;
    }
    return examined;
}

/// Banded left-inverse over Y's window. Rows whose selection does not fit in
/// the data window are left empty and flagged uncertified.
struct SamplingInverse {
    BandedMatrix gamma;
    std::vector<char> certified;
    Index certified_lo = 0;
    Index certified_hi = -1;
    int N = 0;

    bool is_certified(Index k) const
    {
        return k >= gamma.row_lo() && k <= gamma.row_hi() && certified[static_cast<std::size_t>(k - gamma.row_lo())];
    }
    double schur() const { return schur_bound(gamma); }
};

inline SamplingInverse sampling_left_inverse(const TPFiniteType& g, const PointSequence& X, const PointSequence& Y,
                                             const SamplingConfig& cfg, unsigned threads = 1)
{
    if (g.order() < 2 || (g.m() == 0 && g.n() == 1) || (g.m() == 1 && g.n() == 0))
        fail(ErrorCode::TypeTooSmall, "sampling construction needs M >= 2");
    if (!condition_Cr_eps(X, Y, cfg))
        fail(ErrorCode::ConditionViolated, "condition C_r(eps) fails for r = " + std::to_string(cfg.r)
                                               + ", eps = " + format_double(cfg.epsilon));
    const auto flags = separated_subsequence(X, cfg.epsilon);
    SelectionOptions opt;
    opt.margin = cfg.epsilon;
    opt.allowed = &flags;

    const std::size_t rows = Y.size();
    std::vector<BandRow> bands(rows);
    std::vector<char> ok(rows, 0);
    std::vector<int> sizes(rows, 0);
    detail::parallel_for(rows, threads, [&](std::size_t i) {
        const Index k = Y.lo() + static_cast<Index>(i);
        SubmatrixSelection sel;
        try {
            sel = detail::select_for(g, X, Y, k, cfg.r, opt, ErrorCode::ConditionViolated);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::EmptyWindow)
                return;
            throw;
        }
        for (Index j : sel.sample_indices)
            if (!X.in_window(j))
                return;
        bands[i] = left_inverse_row(g, sel).to_band();
        ok[i] = 1;
        sizes[i] = sel.N;
    });

    SamplingInverse inv{BandedMatrix(Y.lo(), Y.hi(), X.lo(), X.hi(), std::move(bands)), ok};
    for (std::size_t i = 0; i < rows; ++i)
        if (ok[i]) {
            const Index k = Y.lo() + static_cast<Index>(i);
            if (inv.certified_hi < inv.certified_lo)
                inv.certified_lo = k;
            inv.certified_hi = k;
            inv.N = std::max(inv.N, sizes[i]);
        }
    if (inv.certified_hi < inv.certified_lo)
        fail(ErrorCode::WindowTooSmall, "no row of the left-inverse fits inside the sample window");
    return inv;
}

// ---------------------------------------------------------------------------
// Signals

struct SISignal {
    TPFiniteType g;
    PointSequence Y;
    /// c_k for k over Y's window
    std::vector<double> c;
};

/// f(t) = sum_k c_k g(t - y_k), skipping nodes where g(t - y_k) is below cutoff.
inline double evaluate_signal(const SISignal& f, double t)
{
    if (f.c.size() != f.Y.size())
        fail(ErrorCode::LengthMismatch, "one coefficient per node is required");
    const Index first = std::max(f.Y.lo(), f.Y.first_above(t - f.g.support_hi()) - 1);
    const Index last = std::min(f.Y.hi(), f.Y.last_below(t - f.g.support_lo()) + 1);
    double sum = 0.0;
    for (Index k = first; k <= last; ++k)
        sum += f.c[static_cast<std::size_t>(k - f.Y.lo())] * f.g(t - f.Y[k]);
    return sum;
}

/// f(x_j) over X's window.
inline std::vector<double> sample_signal(const SISignal& f, const PointSequence& X)
{
    std::vector<double> s;
    s.reserve(X.size());
    for (Index j = X.lo(); j <= X.hi(); ++j)
        s.push_back(evaluate_signal(f, X[j]));
    return s;
}

struct Reconstruction {
    /// over Y's window; zero where not certified
    std::vector<double> coefficients;
    std::vector<char> certified;
    Index k_lo = 0;
    Index certified_lo = 0;
    Index certified_hi = -1;
};

inline Reconstruction reconstruct(const SamplingInverse& inv, std::span<const double> samples)
{
    const std::vector<double> c = inv.gamma.multiply(samples);
    return {c, inv.certified, inv.gamma.row_lo(), inv.certified_lo, inv.certified_hi};
}

inline Reconstruction reconstruct(const TPFiniteType& g, const PointSequence& X, const PointSequence& Y,
                                  const SamplingConfig& cfg, std::span<const double> samples)
{
    return reconstruct(sampling_left_inverse(g, X, Y, cfg), samples);
}

/// Columns index, node, coefficient, certified.
inline void write_reconstruction_csv(std::ostream& os, const Reconstruction& rec, const PointSequence& Y)
{
    os << "index,node,coefficient,certified\n";
    for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
        const Index k = rec.k_lo + static_cast<Index>(i);
        os << k << ',' << format_double(Y[k]) << ',' << format_double(rec.coefficients[i]) << ','
           << (rec.certified[i] ? 1 : 0) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Admissibility for Y = h Z

struct GapAdmissibility {
    bool ok = false;
    double max_gap = 0.0;
    double epsilon = 0.0;
    int r = 0;
};

/// ok iff the largest gap of X is below h. Then eps = (h - gap) / 2 and
/// r = floor(h / (h - gap)) + 1, which guarantees r + 1 points in every
/// (y_k + eps, y_{k+r} - eps).
inline GapAdmissibility max_gap_admissible(const PointSequence& X, double h)
{
    if (!(h > 0.0))
        fail(ErrorCode::InvalidArgument, "node spacing h must be positive");
    GapAdmissibility a;
    a.max_gap = X.mesh();
    a.ok = a.max_gap < h;
    if (a.ok) {
        a.epsilon = 0.5 * (h - a.max_gap);
        const double q = h / (h - a.max_gap);
        if (q > 1e6) {
            a.ok = false;
            return a;
        }
        a.r = static_cast<int>(std::floor(q)) + 1;
    }
    return a;
}

/// x_j = b j + u_j, u_j uniform in [-s, s] with s = (max_gap - b) / 2 shrunk by
/// a relative 1e-9, so every gap is below max_gap. The default base step is
/// b = 0.75 max_gap. Uniform variates use the top 53 bits of mt19937_64.
struct JitterParams {
    double max_gap = 0.8;
    double base_step = 0.0;
    Index lo = -64;
    Index hi = 64;
    std::uint64_t seed = 1;
};

inline PointSequence jittered_samples(const JitterParams& p)
{
    const double b = p.base_step > 0.0 ? p.base_step : 0.75 * p.max_gap;
    if (!(p.max_gap > 0.0) || !(b > 0.5 * p.max_gap) || !(b < p.max_gap))
        fail(ErrorCode::InvalidArgument, "jitter needs max_gap / 2 < base_step < max_gap");
    if (p.hi <= p.lo)
        fail(ErrorCode::EmptyWindow, "jitter window needs at least two points");
    const double s = 0.5 * (p.max_gap - b) * (1.0 - 1e-9);
    std::mt19937_64 rng(p.seed);
    std::vector<double> pts;
    for (Index j = p.lo; j <= p.hi; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        pts.push_back(b * static_cast<double>(j) + s * (2.0 * u - 1.0));
    }
    return PointSequence::table(p.lo, std::move(pts));
}

// ---------------------------------------------------------------------------
// Riesz bounds

struct RieszBounds {
    double lower = 0.0;
    double upper = 0.0;
};

namespace detail {

// (1/h) sum_k |g^(xi + k/h)|^2 with the tail beyond |k| > K below rel_tol of the sum
inline double periodization(const TPFiniteType& g, double h, double xi, double rel_tol = 1e-12)
{
    const int M = g.order();
    double A = 1.0 / (g.scale() * g.scale());
    for (double d : g.deltas())
        A /= (2.0 * std::numbers::pi * d) * (2.0 * std::numbers::pi * d);
    // sum_{|k| > K} A |xi + k/h|^{-2M} <= 2 A h^{2M} (K - 1)^{1 - 2M} / (2M - 1)
    auto tail = [&](double K) { return 2.0 * A * std::pow(h, 2 * M) * std::pow(K - 1.0, 1.0 - 2.0 * M) / (2.0 * M - 1.0); };
    double sum = std::norm(g.fourier(xi));
    long K = 0;
    while (true) {
        for (long k = K + 1; k <= 2 * K + 8; ++k)
            sum += std::norm(g.fourier(xi + static_cast<double>(k) / h)) + std::norm(g.fourier(xi - static_cast<double>(k) / h));
        K = 2 * K + 8;
        if (tail(static_cast<double>(K)) < rel_tol * sum || K > (1L << 26))
            break;
    }
    return sum / h;
}

} // namespace detail

/// Y = h Z: extremes over [0, 1/h) of the periodization (1/h) sum_k |g^(xi + k/h)|^2,
/// located on a grid and polished with Brent's method. Otherwise: extreme
/// eigenvalues of the Gram section [a(y_k - y_l)] over Y's window, with a the
/// autocorrelation of g.
inline RieszBounds riesz_bounds(const TPFiniteType& g, const PointSequence& Y)
{
    RieszBounds rb;
    if (Y.is_uniform()) {
        const double h = Y.step();
        const int grid = 256;
        std::vector<double> vals(grid + 1);
        for (int i = 0; i <= grid; ++i)
            vals[static_cast<std::size_t>(i)] = detail::periodization(g, h, static_cast<double>(i) / (grid * h));
        const auto lo_it = std::min_element(vals.begin(), vals.end());
        const auto hi_it = std::max_element(vals.begin(), vals.end());
        auto polish = [&](std::size_t i, double sign) {
            const double step = 1.0 / (grid * h);
            const double a = (static_cast<double>(i) - 1.0) * step, b = (static_cast<double>(i) + 1.0) * step;
            auto f = [&](double xi) { return sign * detail::periodization(g, h, xi); };
            return sign * boost::math::tools::brent_find_minima(f, a, b, 40).second;
        };
        rb.lower = std::min(*lo_it, polish(static_cast<std::size_t>(lo_it - vals.begin()), 1.0));
        rb.upper = std::max(*hi_it, polish(static_cast<std::size_t>(hi_it - vals.begin()), -1.0));
    } else {
        const TPFiniteType a = g.autocorrelation();
        const auto n = static_cast<Eigen::Index>(Y.size());
        Eigen::MatrixXd G(n, n);
        for (Eigen::Index k = 0; k < n; ++k)
            for (Eigen::Index l = 0; l < n; ++l)
                G(k, l) = a(Y[Y.lo() + k] - Y[Y.lo() + l]);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
        rb.lower = es.eigenvalues().minCoeff();
        rb.upper = es.eigenvalues().maxCoeff();
    }
    if (!(rb.lower > 1e-12 * rb.upper))
        fail(ErrorCode::DegenerateSpectrum, "lower Riesz bound " + format_double(rb.lower) + " is degenerate");
    return rb;
}

// ---------------------------------------------------------------------------
// CSV input

struct SampleTable {
    PointSequence points;
    /// present when the file has a third column
    std::vector<double> values;
};

/// Columns index, position[, value]; indices must be consecutive.
inline SampleTable load_samples_csv(const std::string& path)
{
    const CsvTable t = read_csv_file(path);
    if (t.rows.empty())
        fail(ErrorCode::EmptyWindow, path + " holds no rows");
    const bool with_values = t.rows.front().size() >= 3;
    std::vector<double> pos, val;
    Index lo = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        if (row.size() < 2 || (with_values && row.size() < 3))
            fail(ErrorCode::InvalidArgument, path + ": row " + std::to_string(i + 1) + " has too few columns");
        const auto idx = static_cast<Index>(parse_double(row[0]));
        if (i == 0)
            lo = idx;
        else if (idx != lo + static_cast<Index>(i))
            fail(ErrorCode::InvalidArgument, path + ": indices must be consecutive");
        pos.push_back(parse_double(row[1]));
        if (with_values)
            val.push_back(parse_double(row[2]));
    }
    return {PointSequence::table(lo, std::move(pos)), std::move(val)};
}

} // namespace tpgabor
