#pragma once

// Gabor systems G(g, alpha, beta) = {e^{2 pi i beta l t} g(t - alpha k)} with a
// totally positive window g of finite type M >= 2.
//
// For x in [0, alpha) the pre-Gramian P(x) = [g(x + alpha j - k / beta)]
// has a banded left-inverse Gamma(x) (one submatrix selection per row), and
// row 0 of Gamma(x) gives a compactly supported dual window through
// gamma(x + alpha j) = beta * Gamma(x)_{0,j}.

#include "tpgabor/banded_matrix.hpp"
#include "tpgabor/detail/parallel.hpp"
#include "tpgabor/error.hpp"
#include "tpgabor/io.hpp"
#include "tpgabor/point_sequence.hpp"
#include "tpgabor/quadrature.hpp"
#include "tpgabor/tp_kernel.hpp"
#include "tpgabor/tp_linalg.hpp"

#include "json.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace tpgabor {

/// r = floor(1 / (1 - alpha beta)). The quotient is nudged up by a relative
/// 1e-12 so that exact integers (alpha beta = 0.9 gives 9.999999999999998)
/// are not rounded down.
inline int oversampling_order(double alpha, double beta)
{
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        fail(ErrorCode::InvalidArgument, "lattice parameters must be positive and finite");
    const double ab = alpha * beta;
    if (!(ab < 1.0))
        fail(ErrorCode::DensityViolation, "alpha * beta = " + format_double(ab) + " >= 1: no Gabor frame");
    const double q = 1.0 / (1.0 - ab);
    if (q > 1e6)
        fail(ErrorCode::DensityViolation, "alpha * beta = " + format_double(ab) + " is too close to 1");
    return static_cast<int>(std::floor(q * (1.0 + 1e-12)));
}

struct LatticeParams {
    double alpha = 1.0;
    double beta = 1.0;

    double density() const { return alpha * beta; }
    /// Oversampling order; throws DensityViolation unless alpha beta < 1.
    int r() const { return oversampling_order(alpha, beta); }
    double node_step() const { return 1.0 / beta; }
};

inline LatticeParams make_lattice(double alpha, double beta)
{
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        fail(ErrorCode::InvalidArgument, "lattice parameters must be positive and finite");
    return {alpha, beta};
}

namespace detail {

inline PointSequence lattice_samples(const LatticeParams& lat, double x, Index lo, Index hi)
{
    return PointSequence::uniform(x, lat.alpha, lo, hi);
}

inline PointSequence lattice_nodes(const LatticeParams& lat, Index lo, Index hi)
{
    return PointSequence::uniform(0.0, lat.node_step(), lo, hi);
}

// sample indices j with x + alpha j inside [y_lo + a, y_hi + b], padded by one
inline std::pair<Index, Index> sample_range(const LatticeParams& lat, double x, double t_lo, double t_hi)
{
    return {static_cast<Index>(std::floor((t_lo - x) / lat.alpha)) - 1,
            static_cast<Index>(std::ceil((t_hi - x) / lat.alpha)) + 1};
}

// x - alpha floor(x / alpha), kept inside [0, alpha)
inline double reduce(double t, double alpha, Index* period = nullptr)
{
    double q = std::floor(t / alpha);
    double x = t - alpha * q;
    if (x >= alpha) {
        x -= alpha;
        q += 1.0;
    }
    if (x < 0.0)
        x = 0.0;
    if (period)
        *period = static_cast<Index>(q);
    return x;
}

} // namespace detail

/// P(x)_{jk} = g(x + j alpha - k / beta) for j in [j_lo, j_hi], k in [k_lo, k_hi].
inline BandedMatrix pregramian(const TPFiniteType& g, const LatticeParams& lat, double x, Index j_lo, Index j_hi,
                               Index k_lo, Index k_hi)
{
    return assemble_kernel_matrix(g, detail::lattice_samples(lat, x, j_lo, j_hi), detail::lattice_nodes(lat, k_lo, k_hi));
}

/// Section of G(x) = P(x)^T P(x) on columns k_lo .. k_lo + size - 1, with the
/// sum over j taken over every row where either factor is above the cutoff.
inline Eigen::MatrixXd ronshen_section(const TPFiniteType& g, const LatticeParams& lat, double x, int size, Index k_lo)
{
    if (size < 1)
        fail(ErrorCode::InvalidArgument, "section size must be >= 1");
    const double step = lat.node_step();
    const Index k_hi = k_lo + size - 1;
    const auto [j_lo, j_hi] = detail::sample_range(lat, x, static_cast<double>(k_lo) * step + g.support_lo(),
                                                   static_cast<double>(k_hi) * step + g.support_hi());
    const auto rows = static_cast<Eigen::Index>(j_hi - j_lo + 1);
    Eigen::MatrixXd p(rows, size);
    for (Index j = j_lo; j <= j_hi; ++j)
        for (int c = 0; c < size; ++c)
            p(static_cast<Eigen::Index>(j - j_lo), c) = g(x + static_cast<double>(j) * lat.alpha - static_cast<double>(k_lo + c) * step);
    return p.transpose() * p;
}

/// Centered section: columns -size/2 .. size - 1 - size/2.
inline Eigen::MatrixXd ronshen_section(const TPFiniteType& g, const LatticeParams& lat, double x, int size)
{
    return ronshen_section(g, lat, x, size, -static_cast<Index>(size / 2));
}

// ---------------------------------------------------------------------------
// Left-inverses of P(x)

/// Rows k_lo..k_hi of Gamma(x); the sample window is sized so that every row
/// finds its full selection.
inline BandedMatrix left_inverse_section(const TPFiniteType& g, const LatticeParams& lat, double x, Index k_lo, Index k_hi)
{
    const int r = lat.r();
    const double step = lat.node_step();
    const double reach = static_cast<double>((r + 1) * g.order() + 2) * step;
    const auto [j_lo, j_hi] = detail::sample_range(lat, x, static_cast<double>(k_lo) * step - reach,
                                                   static_cast<double>(k_hi) * step + reach);
    const PointSequence X = detail::lattice_samples(lat, x, j_lo, j_hi);
    const PointSequence Y = detail::lattice_nodes(lat, k_lo - (r + 1) * g.order() - 2, k_hi + (r + 1) * g.order() + 2);
    return build_left_inverse(g, X, Y, r, k_lo, k_hi);
}

/// ||Gamma(x) P(x) - I||_inf (largest absolute row sum) with rows and columns
/// over [k_lo, k_hi].
inline double left_inverse_defect(const TPFiniteType& g, const LatticeParams& lat, double x, Index k_lo, Index k_hi)
{
    const BandedMatrix gamma = left_inverse_section(g, lat, x, k_lo, k_hi);
    const BandedMatrix p = pregramian(g, lat, x, gamma.col_lo(), gamma.col_hi(), k_lo, k_hi);
    const Eigen::MatrixXd d = gamma.to_dense() * p.to_dense() - Eigen::MatrixXd::Identity(gamma.rows(), p.cols());
    return d.cwiseAbs().rowwise().sum().maxCoeff();
}

// ---------------------------------------------------------------------------
// Dual window

struct DualWindowOptions {
    /// uniform cells on [0, alpha) before refinement
    int initial_cells = 256;
    unsigned threads = 1;
};

/// gamma(x + alpha j) = beta * gamma_{0,j}(x), stored as cells of [0, alpha)
/// on which the selection (and hence the index support) is constant. Rows are
/// recomputed from the cell's selection on demand, so gamma can be evaluated
/// exactly at any t.
class DualWindow {
public:
    struct Cell {
        double a = 0.0;
        double b = 0.0;
        SubmatrixSelection sel;
        /// det P_0(x) at the cell midpoint
        double det_mid = 0.0;
    };

    DualWindow(TPFiniteType g, LatticeParams lat, int r, std::vector<Cell> cells)
        : g_(std::move(g))
        , lat_(lat)
        , r_(r)
        , cells_(std::move(cells))
    {
        starts_.reserve(cells_.size());
        for (const auto& c : cells_)
            starts_.push_back(c.a);
    }

    const TPFiniteType& window() const { return g_; }
    const LatticeParams& lattice() const { return lat_; }
    double alpha() const { return lat_.alpha; }
    double beta() const { return lat_.beta; }
    int r() const { return r_; }
    const std::vector<Cell>& cells() const { return cells_; }

    /// [-r m / beta - alpha, r n / beta + alpha]
    /// Node bounds of the support law: y_{-rm} and y_{rn} translated by the
    /// window shift; a one-sided window (m = 0 or n = 0) reaches one node
    /// past the origin on its open side.
    double node_lo() const { return -static_cast<double>(g_.m() > 0 ? r_ * g_.m() : 1) / lat_.beta + g_.shift(); }
    double node_hi() const { return static_cast<double>(g_.n() > 0 ? r_ * g_.n() : 1) / lat_.beta + g_.shift(); }
    double support_lo() const { return node_lo() - lat_.alpha; }
    double support_hi() const { return node_hi() + lat_.alpha; }

    std::size_t cell_index(double x) const
    {
        auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
        return it == starts_.begin() ? 0 : static_cast<std::size_t>(it - starts_.begin()) - 1;
    }

    /// gamma_{0,j}(x) for x in [0, alpha) (reduced modulo alpha otherwise).
    SparseRow row_at(double x) const
    {
        x = detail::reduce(x, lat_.alpha);
        const auto& cell = cells_[cell_index(x)];
        const PointSequence X = detail::lattice_samples(lat_, x, -1, 1);
        return left_inverse_row(g_, cell.sel.rebased(X));
    }

    double operator()(double t) const
    {
        Index period = 0;
        const double x = detail::reduce(t, lat_.alpha, &period);
        const auto& cell = cells_[cell_index(x)];
        const auto& idx = cell.sel.sample_indices;
        const auto it = std::find(idx.begin(), idx.end(), period);
        if (it == idx.end())
            return 0.0;
        return lat_.beta * row_at(x).values[static_cast<std::size_t>(it - idx.begin())];
    }

    /// Largest number of nonzeros of a row gamma_{0,.}(x).
    std::size_t max_row_support() const
    {
        std::size_t best = 0;
        for (const auto& c : cells_)
            best = std::max(best, c.sel.sample_indices.size());
        return best;
    }

    /// Smallest |det P_0(x)| over the cell midpoints.
    double min_abs_det() const
    {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : cells_)
            best = std::min(best, std::abs(c.det_mid));
        return best;
    }

    /// Interior evaluation points of every cell, `per_cell` of them equispaced.
    std::vector<double> sample_points(int per_cell) const
    {
        std::vector<double> xs;
        for (const auto& c : cells_)
            for (int i = 0; i < per_cell; ++i)
                xs.push_back(c.a + (c.b - c.a) * (i + 0.5) / per_cell);
        return xs;
    }

    /// Structural support law: for every cell and every index j it uses, all
    /// t = x + alpha j with x in the cell lie inside the support interval, and
    /// node_lo / alpha - 1 <= j <= node_hi / alpha.
    bool support_ok() const
    {
        const double tol = 1e-12 * std::max(1.0, support_hi() - support_lo());
        for (const auto& c : cells_)
            for (Index j : c.sel.sample_indices) {
                const double t0 = c.a + lat_.alpha * static_cast<double>(j);
                const double t1 = c.b + lat_.alpha * static_cast<double>(j);
                if (t0 < support_lo() - tol || t1 > support_hi() + tol)
                    return false;
                const double jd = static_cast<double>(j);
                if (jd < node_lo() / lat_.alpha - 1.0 - 1e-9 || jd > node_hi() / lat_.alpha + 1e-9)
                    return false;
            }
        return true;
    }

    /// Columns x, j, t = x + alpha j, gamma(t).
    void write_csv(std::ostream& os, int per_cell = 1) const
    {
        os << "x,j,t,gamma\n";
        for (double x : sample_points(per_cell)) {
            const SparseRow row = row_at(x);
            for (std::size_t a = 0; a < row.cols.size(); ++a)
                os << format_double(x) << ',' << row.cols[a] << ','
                   << format_double(x + lat_.alpha * static_cast<double>(row.cols[a])) << ','
                   << format_double(lat_.beta * row.values[a]) << '\n';
        }
    }

private:
    TPFiniteType g_;
    LatticeParams lat_;
    int r_;
    std::vector<Cell> cells_;
    std::vector<double> starts_;
};

namespace detail {

inline bool same_pattern(const SubmatrixSelection& a, const SubmatrixSelection& b)
{
    return a.k1 == b.k1 && a.sample_indices == b.sample_indices;
}

// x in [0, alpha) where some entry g(x + alpha j - l / beta) crosses a node
// (interval membership changes) or the kink of g at its shift
inline std::vector<double> forced_breakpoints(const TPFiniteType& g, const LatticeParams& lat)
{
    std::vector<double> pts{0.0, lat.alpha};
    const int count = 1024;
    for (int l = 0; l < count; ++l) {
        const double y = static_cast<double>(l) * lat.node_step();
        pts.push_back(reduce(y, lat.alpha));
        if (g.shift() != 0.0)
            pts.push_back(reduce(y + g.shift(), lat.alpha));
    }
    return pts;
}

inline std::vector<double> merge_breakpoints(std::vector<double> pts, double alpha)
{
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    const double tol = 1e-12 * alpha;
    for (double p : pts) {
        if (p < 0.0 || p > alpha)
            continue;
        if (out.empty() || p - out.back() > tol)
            out.push_back(p);
    }
    if (out.back() < alpha)
        out.back() = alpha;
    return out;
}

} // namespace detail

/// Compactly supported dual window for alpha beta < 1 and M >= 2. Cells are split
/// by bisection wherever the selection at the two ends of a cell differs.
inline DualWindow dual_window(const TPFiniteType& g, const LatticeParams& lat, const DualWindowOptions& opt = {})
{
    const int r = lat.r();
    if (g.order() < 2)
        fail(ErrorCode::TypeTooSmall, "dual window construction needs M >= 2 (M = 1 is excluded)");
    if (opt.initial_cells < 1)
        fail(ErrorCode::InvalidArgument, "initial_cells must be >= 1");
    const double alpha = lat.alpha;
    const Index reach = (r + 2) * g.order() + 4;
    const PointSequence Y = detail::lattice_nodes(lat, -reach, reach);

    auto select_at = [&](double x) {
        return select_submatrix(g, detail::lattice_samples(lat, x, -1, 1), Y, 0, r);
    };

    std::vector<double> pts = detail::forced_breakpoints(g, lat);
    for (int i = 0; i <= opt.initial_cells; ++i)
        pts.push_back(alpha * i / opt.initial_cells);
    const std::vector<double> edges = detail::merge_breakpoints(std::move(pts), alpha);

    const double probe = 1e-9 * alpha;
    const double min_width = 1e-11 * alpha;
    std::vector<std::vector<DualWindow::Cell>> parts(edges.size() - 1);
    detail::parallel_for(parts.size(), opt.threads, [&](std::size_t i) {
        auto& out = parts[i];
        auto emit = [&](double a, double b) {
            DualWindow::Cell c;
            c.a = a;
            c.b = b;
            const double mid = 0.5 * (a + b);
            c.sel = select_at(mid);
            c.det_mid = left_inverse_row(g, c.sel).det;
            out.push_back(std::move(c));
        };
        auto refine = [&](auto&& self, double a, double b, const SubmatrixSelection& sa, const SubmatrixSelection& sb) -> void {
            if (detail::same_pattern(sa, sb) || b - a < min_width) {
                emit(a, b);
                return;
            }
            const double mid = 0.5 * (a + b);
            const SubmatrixSelection sm = select_at(mid);
            self(self, a, mid, sa, sm);
            self(self, mid, b, sm, sb);
        };
        const double a = edges[i], b = edges[i + 1];
        const double d = std::min(probe, 0.25 * (b - a));
        refine(refine, a, b, select_at(a + d), select_at(b - d));
    });

    std::vector<DualWindow::Cell> cells;
    for (auto& p : parts)
        for (auto& c : p)
            cells.push_back(std::move(c));
    return DualWindow(g, lat, r, std::move(cells));
}

// ---------------------------------------------------------------------------
// Biorthogonality and Bessel checks

struct BiorthogonalityReport {
    double max_deviation = 0.0;
    int kmax = 0;
    int lmax = 0;
    unsigned nodes = 0;
    int worst_k = 0;
    int worst_l = 0;
    std::complex<double> value_00;

    nlohmann::json to_json() const
    {
        return {{"max_deviation", max_deviation}, {"kmax", kmax}, {"lmax", lmax}, {"quadrature_nodes", nodes},
                {"worst_k", worst_k}, {"worst_l", worst_l}, {"value_00", {value_00.real(), value_00.imag()}}};
    }
};

/// max |<gamma, M_{l/alpha} T_{k/beta} g> - alpha beta delta_{k0} delta_{l0}| for
/// |k| <= kmax, |l| <= lmax. The integral is folded onto [0, alpha):
/// int_0^alpha sum_j gamma(x + alpha j) g(x + alpha j - k/beta) e^{-2 pi i l x/alpha} dx,
/// with composite Gauss–Legendre on the cells of gamma, further split where
/// g(. - k/beta) has its kink.
inline BiorthogonalityReport verify_biorthogonality(const TPFiniteType& g, const DualWindow& gamma, int kmax, int lmax,
                                                    unsigned nodes = 32)
{
    if (kmax < 0 || lmax < 0 || nodes < 1)
        fail(ErrorCode::InvalidArgument, "kmax, lmax must be >= 0 and nodes >= 1");
    const double alpha = gamma.alpha();
    const double beta = gamma.beta();
    std::vector<double> pts;
    for (const auto& c : gamma.cells()) {
        pts.push_back(c.a);
        pts.push_back(c.b);
    }
    for (int k = -kmax; k <= kmax; ++k)
        pts.push_back(detail::reduce(g.shift() + static_cast<double>(k) / beta, alpha));
    const std::vector<double> edges = detail::merge_breakpoints(std::move(pts), alpha);

    const auto K = static_cast<std::size_t>(2 * kmax + 1);
    const auto L = static_cast<std::size_t>(2 * lmax + 1);
    std::vector<std::complex<double>> acc(K * L);
    const GaussLegendre& rule = gauss_legendre(nodes);
    std::vector<double> s(K);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double u = edges[e], v = edges[e + 1];
        const double half = 0.5 * (v - u), mid = 0.5 * (u + v);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.nodes[q];
            const double w = half * rule.weights[q];
            const SparseRow row = gamma.row_at(x);
            for (std::size_t kk = 0; kk < K; ++kk) {
                const double shift = static_cast<double>(static_cast<int>(kk) - kmax) / beta;
                double sum = 0.0;
                for (std::size_t a = 0; a < row.cols.size(); ++a)
                    sum += beta * row.values[a] * g(x + alpha * static_cast<double>(row.cols[a]) - shift);
                s[kk] = w * sum;
            }
            for (std::size_t ll = 0; ll < L; ++ll) {
                const double l = static_cast<double>(static_cast<int>(ll) - lmax);
                const std::complex<double> phase = std::polar(1.0, -2.0 * std::numbers::pi * l * x / alpha);
                for (std::size_t kk = 0; kk < K; ++kk)
                    acc[kk * L + ll] += s[kk] * phase;
            }
        }
    }

    BiorthogonalityReport rep;
    rep.kmax = kmax;
    rep.lmax = lmax;
    rep.nodes = nodes;
    for (std::size_t kk = 0; kk < K; ++kk)
        for (std::size_t ll = 0; ll < L; ++ll) {
            const int k = static_cast<int>(kk) - kmax;
            const int l = static_cast<int>(ll) - lmax;
            const double expected = (k == 0 && l == 0) ? alpha * beta : 0.0;
            const double dev = std::abs(acc[kk * L + ll] - expected);
            if (k == 0 && l == 0)
                rep.value_00 = acc[kk * L + ll];
            if (dev > rep.max_deviation) {
                rep.max_deviation = dev;
                rep.worst_k = k;
                rep.worst_l = l;
            }
        }
    return rep;
}

/// sum_j sup_x |gamma_{0,j}(x)|, the sup taken over `per_cell` interior points
/// of every cell. Finite for a compactly supported dual window.
inline double bessel_check(const DualWindow& gamma, int per_cell = 8)
{
    std::map<Index, double> sup;
    for (double x : gamma.sample_points(per_cell)) {
        const SparseRow row = gamma.row_at(x);
        for (std::size_t a = 0; a < row.cols.size(); ++a) {
            double& s = sup[row.cols[a]];
            s = std::max(s, std::abs(row.values[a]));
        }
    }
    double total = 0.0;
    for (const auto& [j, v] : sup)
        total += v;
    return total;
}

/// sup over the sampled x of max_j |gamma_{0,j}(x)|.
inline double max_entry(const DualWindow& gamma, int per_cell = 8)
{
    double best = 0.0;
    for (double x : gamma.sample_points(per_cell))
        for (double v : gamma.row_at(x).values)
            best = std::max(best, std::abs(v));
    return best;
}

// ---------------------------------------------------------------------------
// Frame bounds from Ron–Shen sections

enum class FrameVerdict { Frame, NotFrame };

inline const char* to_string(FrameVerdict v) { return v == FrameVerdict::Frame ? "Frame" : "NotFrame"; }

struct SpectrumSample {
    double x = 0.0;
    int size = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

struct FrameBounds {
    /// bounds at the largest truncation size
    double A_est = 0.0;
    double B_est = 0.0;
    std::vector<int> truncation_sizes;
    std::vector<double> x_samples;
    /// per size: min over x of lambda_min, max over x of lambda_max
    std::vector<double> A_ladder;
    std::vector<double> B_ladder;
    std::vector<SpectrumSample> table;

    nlohmann::json to_json() const
    {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : table)
            rows.push_back({{"x", s.x}, {"size", s.size}, {"lambda_min", s.lambda_min}, {"lambda_max", s.lambda_max}});
        return {{"A_est", A_est}, {"B_est", B_est}, {"truncation_sizes", truncation_sizes}, {"x_samples", x_samples},
                {"A_ladder", A_ladder}, {"B_ladder", B_ladder}, {"table", std::move(rows)}};
    }
};

struct FrameReport {
    FrameVerdict verdict = FrameVerdict::NotFrame;
    FrameBounds bounds;
};

inline std::vector<int> default_truncation_sizes() { return {16, 32, 64, 128}; }

/// x_i = i alpha / count, i = 0 .. count - 1.
inline std::vector<double> default_x_samples(double alpha, int count = 17)
{
    std::vector<double> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(alpha * i / count);
    return xs;
}

/// Verdict from the density alone (frame iff alpha beta < 1 for M >= 2), and
/// spectral extremes of centered Ron–Shen sections over sizes and x samples.
inline FrameReport frame_check(const TPFiniteType& g, const LatticeParams& lat, std::vector<int> sizes = default_truncation_sizes(),
                               std::vector<double> x_samples = {}, unsigned threads = 1)
{
    if (g.order() < 2)
        fail(ErrorCode::TypeTooSmall, "frame check needs M >= 2; for M = 1 the frame region is alpha beta <= 1");
    make_lattice(lat.alpha, lat.beta);
    if (sizes.empty())
        fail(ErrorCode::InvalidArgument, "at least one truncation size is required");
    if (x_samples.empty())
        x_samples = default_x_samples(lat.alpha);

    FrameReport rep;
    rep.verdict = lat.density() < 1.0 ? FrameVerdict::Frame : FrameVerdict::NotFrame;
    auto& fb = rep.bounds;
    fb.truncation_sizes = sizes;
    fb.x_samples = x_samples;
    fb.table.resize(sizes.size() * x_samples.size());
    detail::parallel_for(fb.table.size(), threads, [&](std::size_t i) {
        const int size = sizes[i / x_samples.size()];
        const double x = x_samples[i % x_samples.size()];
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ronshen_section(g, lat, x, size), Eigen::EigenvaluesOnly);
        fb.table[i] = {x, size, es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
    });
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t i = 0; i < x_samples.size(); ++i) {
            const auto& e = fb.table[s * x_samples.size() + i];
            lo = std::min(lo, e.lambda_min);
            hi = std::max(hi, e.lambda_max);
        }
        fb.A_ladder.push_back(lo);
        fb.B_ladder.push_back(hi);
    }
    fb.A_est = std::max(0.0, fb.A_ladder.back());
    fb.B_est = fb.B_ladder.back();
    return rep;
}

} // namespace tpgabor
