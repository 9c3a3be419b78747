#pragma once

// Totally positive matrix algebra on kernel matrices P = [g(x_j - y_k)]:
// Schoenberg–Whitney tests, determinant classification, the square
// submatrix selection that yields one row of an algebraic left-inverse of P,
// and a Schur-type norm bound for banded left-inverses.

#include "tpgabor/banded_matrix.hpp"
#include "tpgabor/error.hpp"
#include "tpgabor/point_sequence.hpp"
#include "tpgabor/tp_kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tpgabor {

/// Kernel matrix P_{jk} = g(x_j - y_k) over the windows of X (rows) and Y
/// (columns). Each row stores only the columns where y_k lies in
/// [x_j - support_hi, x_j - support_lo] of g.
inline BandedMatrix assemble_kernel_matrix(const TPFiniteType& g, const PointSequence& X, const PointSequence& Y)
{
    std::vector<BandRow> rows;
    rows.reserve(X.size());
    for (Index j = X.lo(); j <= X.hi(); ++j) {
        const double x = X[j];
        Index first = std::max(Y.lo(), Y.first_above(x - g.support_hi()) - 1);
        Index last = std::min(Y.hi(), Y.last_below(x - g.support_lo()) + 1);
        BandRow row;
        row.first = first;
        for (Index k = first; k <= last; ++k)
            row.values.push_back(g(x - Y[k]));
        while (!row.values.empty() && row.values.back() == 0.0)
            row.values.pop_back();
        auto lead = std::find_if(row.values.begin(), row.values.end(), [](double v) { return v != 0.0; });
        row.first += static_cast<Index>(lead - row.values.begin());
        row.values.erase(row.values.begin(), lead);
        if (row.values.empty())
            row.first = Y.lo();
        rows.push_back(std::move(row));
    }
    return BandedMatrix(X.lo(), X.hi(), Y.lo(), Y.hi(), std::move(rows));
}

namespace detail {

inline void require_increasing(std::span<const double> v, const char* name)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            fail(ErrorCode::NonIncreasingSequence, std::string(name) + " is not strictly increasing");
}

} // namespace detail

/// Schoenberg–Whitney conditions x_{j-m} < y_j < x_{j+n}, 1 <= j <= N, with
/// x_j = -inf for j < 1 and +inf for j > N.
inline bool sw_check(std::span<const double> X, std::span<const double> Y, int m, int n)
{
    if (X.size() != Y.size())
        fail(ErrorCode::LengthMismatch, "point lists must have equal length");
    if (m < 0 || n < 0 || m + n < 2)
        fail(ErrorCode::TypeTooSmall, "Schoenberg–Whitney characterization needs m + n >= 2");
    detail::require_increasing(X, "X");
    detail::require_increasing(Y, "Y");
    const auto N = static_cast<std::ptrdiff_t>(X.size());
    for (std::ptrdiff_t j = 0; j < N; ++j) {
        const std::ptrdiff_t below = j - m;
        const std::ptrdiff_t above = j + n;
        if (below >= 0 && !(X[static_cast<std::size_t>(below)] < Y[static_cast<std::size_t>(j)]))
            return false;
        if (above < N && !(Y[static_cast<std::size_t>(j)] < X[static_cast<std::size_t>(above)]))
            return false;
    }
    return true;
}

/// Same conditions with a margin: xi_j + eps <= eta_{j+m}, eta_j + eps <= xi_{j+n}.
inline bool sw_check_margin(std::span<const double> X, std::span<const double> Y, int m, int n, double eps)
{
    if (X.size() != Y.size())
        fail(ErrorCode::LengthMismatch, "point lists must have equal length");
    const auto N = static_cast<std::ptrdiff_t>(X.size());
    for (std::ptrdiff_t j = 0; j < N; ++j) {
        if (j + m < N && !(X[static_cast<std::size_t>(j)] + eps <= Y[static_cast<std::size_t>(j + m)]))
            return false;
        if (j + n < N && !(Y[static_cast<std::size_t>(j)] + eps <= X[static_cast<std::size_t>(j + n)]))
            return false;
    }
    return true;
}

enum class DetSign { Positive, Zero };

struct DetClassification {
    DetSign sign = DetSign::Zero;
    double det = 0.0;
    /// 1e-10 * prod_j max_k |g(x_j - y_k)|
    double threshold = 0.0;
};

inline constexpr double det_zero_tolerance = 1e-10;

inline double row_scale(const Eigen::MatrixXd& a)
{
    double scale = 1.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        scale *= a.row(i).cwiseAbs().maxCoeff();
    return scale;
}

inline DetClassification det_sign_oracle(const TPFiniteType& g, std::span<const double> X, std::span<const double> Y)
{
    if (X.size() != Y.size())
        fail(ErrorCode::LengthMismatch, "point lists must have equal length");
    if (g.order() < 2)
        fail(ErrorCode::TypeTooSmall, "determinant characterization needs m + n >= 2");
    detail::require_increasing(X, "X");
    detail::require_increasing(Y, "Y");
    const auto N = static_cast<Eigen::Index>(X.size());
    Eigen::MatrixXd a(N, N);
    for (Eigen::Index j = 0; j < N; ++j)
        for (Eigen::Index k = 0; k < N; ++k)
            a(j, k) = g(X[static_cast<std::size_t>(j)] - Y[static_cast<std::size_t>(k)]);
    DetClassification out;
    out.det = N == 0 ? 1.0 : a.partialPivLu().determinant();
    out.threshold = det_zero_tolerance * row_scale(a);
    if (out.det < -out.threshold)
        fail(ErrorCode::NegativeDeterminant,
             "det = " + format_double(out.det) + " violates total positivity (threshold " + format_double(out.threshold) + ")");
    out.sign = std::abs(out.det) <= out.threshold ? DetSign::Zero : DetSign::Positive;
    return out;
}

/// The square submatrix P_k = [g(xi_a - eta_b)] whose inverse supplies row k
/// of a left-inverse of P.
struct SubmatrixSelection {
    Index row_index_k = 0;
    int N = 0;
    Index k1 = 0, k2 = 0;
    /// admissible row range: candidates x_j with j1 <= j <= j2
    Index j1 = 0, j2 = 0;
    int m = 0, n = 0;
    /// position of y_k among eta (0-based)
    int target = 0;
    double margin = 0.0;
    std::vector<Index> sample_indices;
    std::vector<double> xi;
    std::vector<double> eta;
    /// bounds of the support law: nonzero gamma_{k,j} only for support_lo <= x_j <= support_hi
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();

    /// The same index pattern evaluated on another realization of X (used
    /// when x moves inside a cell of constant selection).
    SubmatrixSelection rebased(const PointSequence& X) const
    {
        SubmatrixSelection s = *this;
        for (std::size_t a = 0; a < s.sample_indices.size(); ++a)
            s.xi[a] = X[s.sample_indices[a]];
        return s;
    }
};

/// Options for the selection rule: a margin eps keeps samples eps away from
/// the nodes bounding their intervals, and `allowed` restricts the samples to
/// a subsequence of X (flags over X's window).
struct SelectionOptions {
    double margin = 0.0;
    const std::vector<char>* allowed = nullptr;
};

namespace detail {

inline bool is_allowed(const PointSequence& X, const SelectionOptions& opt, Index j)
{
    if (!X.defined(j))
        return false;
    if (!opt.allowed)
        return true;
    if (!X.in_window(j))
        return false;
    return (*opt.allowed)[static_cast<std::size_t>(j - X.lo())] != 0;
}

inline double node(const PointSequence& Y, Index k)
{
    if (!Y.defined(k))
        fail(ErrorCode::EmptyWindow, "node index " + std::to_string(k) + " outside the node window");
    return Y[k];
}

inline double node_or(const PointSequence& Y, Index k, double fallback)
{
    return Y.defined(k) ? Y[k] : fallback;
}

// m = 0, n = 1: the explicit 2x2 selection
inline SubmatrixSelection select_two_by_two(const PointSequence& X, const PointSequence& Y, Index k)
{
    const double yk = node(Y, k);
    const double yk1 = node(Y, k + 1);
    if (!X.covers(node_or(Y, k - 1, yk), yk1))
        fail(ErrorCode::EmptyWindow, "sample window does not cover the nodes around row " + std::to_string(k));
    const Index ja = X.last_below(yk);
    const Index jb = X.first_above(yk);
    if (!X.defined(ja) || !X.defined(jb) || !(X[jb] < yk1) || (Y.defined(k - 1) && !(X[ja] > Y[k - 1])))
        fail(ErrorCode::ConditionCrViolated, "no sample inside the intervals adjacent to node " + std::to_string(k));
    SubmatrixSelection s;
    s.row_index_k = k;
    s.N = 2;
    s.k1 = k;
    s.k2 = k + 1;
    s.j1 = ja;
    s.j2 = jb;
    s.m = 0;
    s.n = 1;
    s.target = 0;
    s.sample_indices = {ja, jb};
    s.xi = {X[ja], X[jb]};
    s.eta = {yk, yk1};
    s.support_lo = node_or(Y, k - 1, -std::numeric_limits<double>::infinity());
    s.support_hi = yk1;
    return s;
}

// m >= 1, n >= 1, or m = 0, n >= 2
inline SubmatrixSelection select_general(int m, int n, const PointSequence& X, const PointSequence& Y, Index k, int r,
                                         const SelectionOptions& opt, ErrorCode shortage)
{
    const double eps = opt.margin;
    int N = 0;
    Index k1 = 0;
    int target = 0;
    if (m > 0) {
        N = n > 1 ? (m + n - 1) * (r + 1) : m * (r + 1) + 1;
        k1 = k - static_cast<Index>((r + 1) * m) + 1;
        target = (r + 1) * m - 1;
    } else {
        N = (n - 1) * (r + 1);
        k1 = k;
        target = 0;
    }
    const Index k2 = k1 + N - 1;
    const Index lnode = k1 + m - 1;
    const Index hnode = k2 - n + 1;
    const double lo = node(Y, lnode) + eps;
    const double hi = node(Y, hnode) - eps;
    for (Index l = k1; l <= k2; ++l)
        node(Y, l);
    if (!X.covers(node(Y, lnode), node(Y, hnode)))
        fail(ErrorCode::EmptyWindow, "sample window does not cover the nodes of row " + std::to_string(k));

    const Index jfirst = X.first_above(lo);
    const Index jlast = X.last_below(hi);
    std::vector<Index> cand;
    for (Index j = jfirst; j <= jlast; ++j)
        if (is_allowed(X, opt, j))
            cand.push_back(j);

    // scores closer than this count as ties (broken by the smaller index), so
    // geometrically tied candidates are not separated by rounding
    const double tie = 1e-10 * (Y[hnode] - Y[lnode]);
    std::vector<char> used(cand.size(), 0);
    std::vector<Index> chosen;
    Index left_j1 = 0;
    // one sample per interval (y_l + eps, y_{l+1} - eps), nearest to its midpoint;
    // for m = 0 the first interval takes its last sample, closest to y_k
    for (Index l = lnode; l < hnode; ++l) {
        const double a = Y[l] + eps;
        const double b = Y[l + 1] - eps;
        const double mid = 0.5 * (Y[l] + Y[l + 1]);
        std::optional<std::size_t> best;
        double best_score = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cand.size(); ++c) {
            const double x = X[cand[c]];
            if (used[c] || !(x > a) || !(x < b))
                continue;
            const double score = (m == 0 && l == lnode) ? (b - x) : std::abs(x - mid);
            if (score < best_score - tie) {
                best_score = score;
                best = c;
            }
        }
        if (!best)
            fail(shortage, "no admissible sample in (y_" + std::to_string(l) + ", y_" + std::to_string(l + 1) + ") for row " + std::to_string(k));
        used[*best] = 1;
        chosen.push_back(cand[*best]);
        if (m == 0 && l == lnode)
            left_j1 = cand[*best];
    }

    // remaining samples: greedy max-min distance to the nodes and to the samples already chosen
    const auto need = static_cast<std::size_t>(N) - chosen.size();
    auto pool_size = [&](bool restrict_left) {
        std::size_t cnt = 0;
        for (std::size_t c = 0; c < cand.size(); ++c)
            if (!used[c] && (!restrict_left || cand[c] > left_j1))
                ++cnt;
        return cnt;
    };
    const bool restrict_left = m == 0 && pool_size(true) >= need;
    for (std::size_t t = 0; t < need; ++t) {
        std::optional<std::size_t> best;
        double best_score = -1.0;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (used[c] || (restrict_left && cand[c] <= left_j1))
                continue;
            const double x = X[cand[c]];
            double score = std::numeric_limits<double>::infinity();
            for (Index l = lnode; l <= hnode; ++l)
                score = std::min(score, std::abs(x - Y[l]));
            for (Index j : chosen)
                score = std::min(score, std::abs(x - X[j]));
            if (score > best_score + tie) {
                best_score = score;
                best = c;
            }
        }
        if (!best)
            fail(shortage, "only " + std::to_string(chosen.size()) + " of " + std::to_string(N) + " samples available for row " + std::to_string(k));
        used[*best] = 1;
        chosen.push_back(cand[*best]);
    }
    std::sort(chosen.begin(), chosen.end());

    SubmatrixSelection s;
    s.row_index_k = k;
    s.N = N;
    s.k1 = k1;
    s.k2 = k2;
    s.j1 = jfirst;
    s.j2 = jlast;
    s.m = m;
    s.n = n;
    s.target = target;
    s.margin = eps;
    s.sample_indices = chosen;
    for (Index j : chosen)
        s.xi.push_back(X[j]);
    for (Index l = k1; l <= k2; ++l)
        s.eta.push_back(Y[l]);
    s.support_lo = m > 0 ? node_or(Y, k - static_cast<Index>(r) * m, Y[lnode]) : Y[lnode];
    s.support_hi = n > 0 ? node_or(Y, k + static_cast<Index>(r) * n, Y[hnode]) : Y[hnode];

    const bool ok = eps > 0.0 ? sw_check_margin(s.xi, s.eta, m, n, eps) : sw_check(s.xi, s.eta, m, n);
    if (!ok)
        fail(shortage, "selected samples violate the Schoenberg–Whitney conditions for row " + std::to_string(k));
    return s;
}

inline std::vector<char> reflect_flags(const std::vector<char>& flags)
{
    return std::vector<char>(flags.rbegin(), flags.rend());
}

inline SubmatrixSelection reflect_back(SubmatrixSelection s)
{
    std::reverse(s.sample_indices.begin(), s.sample_indices.end());
    for (auto& j : s.sample_indices)
        j = -j;
    std::reverse(s.xi.begin(), s.xi.end());
    for (auto& x : s.xi)
        x = -x;
    std::reverse(s.eta.begin(), s.eta.end());
    for (auto& y : s.eta)
        y = -y;
    const Index k1 = -s.k2, k2 = -s.k1;
    s.k1 = k1;
    s.k2 = k2;
    const Index j1 = -s.j2, j2 = -s.j1;
    s.j1 = j1;
    s.j2 = j2;
    s.row_index_k = -s.row_index_k;
    s.target = s.N - 1 - s.target;
    std::swap(s.m, s.n);
    const double lo = -s.support_hi, hi = -s.support_lo;
    s.support_lo = lo;
    s.support_hi = hi;
    return s;
}

inline SubmatrixSelection select_with(int m, int n, const PointSequence& X, const PointSequence& Y, Index k, int r,
                                      const SelectionOptions& opt, ErrorCode shortage)
{
    if (r < 1)
        fail(ErrorCode::InvalidArgument, "oversampling order r must be >= 1");
    if (m + n < 1)
        fail(ErrorCode::TypeTooSmall, "window has no factors");
    if (n == 0) {
        // reflection x -> -x exchanges m and n
        const PointSequence Xr = X.reflected();
        const PointSequence Yr = Y.reflected();
        std::vector<char> flags;
        SelectionOptions ropt = opt;
        if (opt.allowed) {
            flags = reflect_flags(*opt.allowed);
            ropt.allowed = &flags;
        }
        return reflect_back(select_with(0, m, Xr, Yr, -k, r, ropt, shortage));
    }
    if (m == 0 && n == 1) {
        if (opt.margin > 0.0 || opt.allowed)
            fail(ErrorCode::TypeTooSmall, "margin-separated selection needs m + n >= 2");
        return select_two_by_two(X, Y, k);
    }
    return select_general(m, n, X, Y, k, r, opt, shortage);
}

// g(x - y) = g_0(x - (y + delta)) with g_0 unshifted: select against the
// translated nodes, then restore the node values
inline SubmatrixSelection select_for(const TPFiniteType& g, const PointSequence& X, const PointSequence& Y, Index k, int r,
                                     const SelectionOptions& opt, ErrorCode shortage)
{
    if (g.shift() == 0.0)
        return select_with(g.m(), g.n(), X, Y, k, r, opt, shortage);
    SubmatrixSelection s = select_with(g.m(), g.n(), X, Y.translated(g.shift()), k, r, opt, shortage);
    for (std::size_t b = 0; b < s.eta.size(); ++b)
        s.eta[b] = Y[s.k1 + static_cast<Index>(b)];
    return s;
}

} // namespace detail

/// Column/row selection for row k of the left-inverse under condition (C_r).
/// A shifted window moves the interlacing onto the nodes y_k + delta.
inline SubmatrixSelection select_submatrix(const TPFiniteType& g, const PointSequence& X, const PointSequence& Y,
                                           Index k, int r, const SelectionOptions& opt = {})
{
    return detail::select_for(g, X, Y, k, r, opt, ErrorCode::ConditionCrViolated);
}

/// Row k of a left-inverse: its nonzero columns and values.
struct SparseRow {
    Index k = 0;
    std::vector<Index> cols;
    std::vector<double> values;
    double det = 0.0;

    double at(Index j) const
    {
        for (std::size_t a = 0; a < cols.size(); ++a)
            if (cols[a] == j)
                return values[a];
        return 0.0;
    }

    /// Dense band from the first to the last selected column, zeros between.
    BandRow to_band() const
    {
        BandRow row;
        if (cols.empty())
            return row;
        row.first = cols.front();
        row.values.assign(static_cast<std::size_t>(cols.back() - cols.front() + 1), 0.0);
        for (std::size_t a = 0; a < cols.size(); ++a)
            row.values[static_cast<std::size_t>(cols[a] - cols.front())] = values[a];
        return row;
    }
};

inline Eigen::MatrixXd selection_matrix(const TPFiniteType& g, const SubmatrixSelection& sel)
{
    const auto N = static_cast<Eigen::Index>(sel.N);
    Eigen::MatrixXd p(N, N);
    for (Eigen::Index a = 0; a < N; ++a)
        for (Eigen::Index b = 0; b < N; ++b)
            p(a, b) = g(sel.xi[static_cast<std::size_t>(a)] - sel.eta[static_cast<std::size_t>(b)]);
    return p;
}

/// Reciprocal condition estimate below which P_k counts as singular.
inline constexpr double min_rcond = 1e-15;

/// Row of P_k^{-1} belonging to the node y_k, obtained from P_k^T c = e_target
/// by LU with partial pivoting.
inline SparseRow left_inverse_row(const TPFiniteType& g, const SubmatrixSelection& sel)
{
    const Eigen::MatrixXd p = selection_matrix(g, sel);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(p.transpose());
    const double det = lu.determinant();
    // The row-scaled determinant shrinks like a product over N rows and is far
    // too pessimistic for smooth windows at large N; the solve is accepted
    // whenever it clears that threshold or the LU condition estimate does.
    const double threshold = det_zero_tolerance * row_scale(p);
    const double rcond = lu.rcond();
    if (!(std::abs(det) > threshold) && !(rcond > min_rcond))
        fail(ErrorCode::SingularSubmatrix, "det P_k = " + format_double(det) + " (threshold " + format_double(threshold)
                                               + ", rcond " + format_double(rcond) + ", N = " + std::to_string(sel.N)
                                               + ", row " + std::to_string(sel.row_index_k) + ")");
    Eigen::VectorXd e = Eigen::VectorXd::Zero(p.rows());
    e(sel.target) = 1.0;
    const Eigen::VectorXd c = lu.solve(e);
    SparseRow row;
    row.k = sel.row_index_k;
    row.det = det;
    row.cols = sel.sample_indices;
    row.values.assign(c.data(), c.data() + c.size());
    return row;
}

inline SparseRow left_inverse_row(const TPFiniteType& g, const SubmatrixSelection& sel, const PointSequence& X,
                                  const PointSequence& /*Y*/)
{
    for (Index j : sel.sample_indices)
        if (!X.defined(j))
            fail(ErrorCode::EmptyWindow, "selected sample " + std::to_string(j) + " outside the sample window");
    return left_inverse_row(g, sel.rebased(X));
}

/// max_l |sum_j gamma_{k,j} g(x_j - y_l) - delta_{k,l}| over Y's window.
inline double row_identity_residual(const TPFiniteType& g, const SparseRow& row, const PointSequence& X, const PointSequence& Y)
{
    double worst = 0.0;
    for (Index l = Y.lo(); l <= Y.hi(); ++l) {
        double acc = 0.0;
        for (std::size_t a = 0; a < row.cols.size(); ++a)
            acc += row.values[a] * g(X[row.cols[a]] - Y[l]);
        worst = std::max(worst, std::abs(acc - (l == row.k ? 1.0 : 0.0)));
    }
    return worst;
}

/// Support law: every nonzero gamma_{k,j} has support_lo <= x_j <= support_hi.
inline bool obeys_support_law(const SubmatrixSelection& sel, const SparseRow& row, const PointSequence& X)
{
    for (std::size_t a = 0; a < row.cols.size(); ++a) {
        if (row.values[a] == 0.0)
            continue;
        const double x = X[row.cols[a]];
        if (x < sel.support_lo || x > sel.support_hi)
            return false;
    }
    return true;
}

/// Condition (C_r) over the realized windows: (a) every (y_k, y_{k+1}) holds a
/// point of X and (b) every (y_k, y_{k+r}) holds at least r + 1 points. Only
/// intervals covered by X's window are examined; false if there are none.
inline bool condition_Cr(const PointSequence& X, const PointSequence& Y, int r)
{
    if (r < 1)
        return false;
    bool examined = false;
    for (Index k = Y.lo(); k < Y.hi(); ++k) {
        if (!X.covers(Y[k], Y[k + 1]))
            continue;
        examined = true;
        if (X.count_in(Y[k], Y[k + 1]) < 1)
            return false;
    }
    for (Index k = Y.lo(); k + r <= Y.hi(); ++k) {
        if (!X.covers(Y[k], Y[k + r]))
            continue;
        if (X.count_in(Y[k], Y[k + r]) < r + 1)
            return false;
    }
    return examined;
}

/// (2N - 1) C from the Schur test.
inline double schur_constant(std::size_t N, double C)
{
    return (2.0 * static_cast<double>(N) - 1.0) * C;
}

/// Schur-type bound (2N - 1) max|entry| with N the largest row nonzero
/// count. N is raised if some column holds more than 2N - 1 nonzeros, so the
/// value remains a valid row/column-sum bound.
inline double schur_bound(const BandedMatrix& a)
{
    if (!a.all_finite())
        fail(ErrorCode::UnboundedEntries, "matrix has non-finite entries");
    std::size_t N = a.max_row_nonzeros();
    const std::size_t col = a.max_col_nonzeros();
    N = std::max(N, (col + 2) / 2);
    if (N == 0)
        return 0.0;
    return schur_constant(N, a.max_abs());
}

/// Schur test sqrt(max row sum * max column sum) of |a|, an upper bound for
/// the l2 operator norm.
inline double schur_test(const BandedMatrix& a)
{
    if (!a.all_finite())
        fail(ErrorCode::UnboundedEntries, "matrix has non-finite entries");
    std::vector<double> cols(a.cols(), 0.0);
    double row_max = 0.0;
    for (Index i = a.row_lo(); i <= a.row_hi(); ++i) {
        const auto& r = a.row(i);
        double sum = 0.0;
        for (std::size_t t = 0; t < r.values.size(); ++t) {
            sum += std::abs(r.values[t]);
            cols[static_cast<std::size_t>(r.first - a.col_lo()) + t] += std::abs(r.values[t]);
        }
        row_max = std::max(row_max, sum);
    }
    return std::sqrt(row_max * *std::max_element(cols.begin(), cols.end()));
}

/// Rows k_lo..k_hi of a left-inverse, columns over X's window.
inline BandedMatrix build_left_inverse(const TPFiniteType& g, const PointSequence& X, const PointSequence& Y, int r,
                                       Index k_lo, Index k_hi, const SelectionOptions& opt = {})
{
    std::vector<BandRow> rows;
    for (Index k = k_lo; k <= k_hi; ++k) {
        const auto sel = select_submatrix(g, X, Y, k, r, opt);
        const auto row = left_inverse_row(g, sel);
        for (Index j : row.cols)
            if (!X.in_window(j))
                fail(ErrorCode::EmptyWindow, "row " + std::to_string(k) + " needs sample " + std::to_string(j) + " outside the window");
        rows.push_back(row.to_band());
    }
    return BandedMatrix(k_lo, k_hi, X.lo(), X.hi(), std::move(rows));
}

} // namespace tpgabor
