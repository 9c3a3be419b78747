#include "oracles.hpp"

#include "tpgabor/si_sampling.hpp"
#include "tpgabor/tp_linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace tpgabor;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

oracle::Matrix dense(const BandedMatrix& a)
{
    const auto d = a.to_dense();
    oracle::Matrix m(static_cast<std::size_t>(d.rows()), std::vector<double>(static_cast<std::size_t>(d.cols())));
    for (Eigen::Index i = 0; i < d.rows(); ++i)
        for (Eigen::Index j = 0; j < d.cols(); ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d(i, j);
    return m;
}

std::vector<double> random_sorted(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> U(-3, 3);
    std::vector<double> v(n);
    for (auto& x : v)
        x = std::round(U(rng) * 4) / 4 + (rng() % 2 ? 0.0 : U(rng) * 1e-1);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

TEST(TpLinalg, KernelMatrixEntries)
{
    const auto g = two_sided_exponential();
    const auto X = PointSequence::table(0, {0, 1});
    const auto P = assemble_kernel_matrix(g, X, X);
    EXPECT_DOUBLE_EQ(P(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(P(0, 1), std::exp(-1.0));
    EXPECT_DOUBLE_EQ(P(1, 0), std::exp(-1.0));
    EXPECT_DOUBLE_EQ(P(1, 1), 1.0);

    const auto one = assemble_kernel_matrix(g, PointSequence::table(0, {0}), PointSequence::table(0, {0}));
    EXPECT_DOUBLE_EQ(one(0, 0), g(0));

    // right-sided window, all x_j - y_k < 0
    const auto h = make_tp(1, 0, {1, 0.5});
    const auto Z = assemble_kernel_matrix(h, PointSequence::table(0, {0, 1, 2}), PointSequence::table(0, {5, 6}));
    EXPECT_EQ(Z.max_abs(), 0.0);
}

TEST(TpLinalg, KernelMatrixBandsMatchDirectEvaluation)
{
    const auto g = make_tp(1, 0.1, {0.5, -0.25});
    const auto X = PointSequence::uniform(0.13, 0.37, -60, 60);
    const auto Y = PointSequence::uniform(0, 1, -20, 20);
    const auto P = assemble_kernel_matrix(g, X, Y);
    for (Index j = X.lo(); j <= X.hi(); ++j)
        for (Index k = Y.lo(); k <= Y.hi(); ++k)
            EXPECT_NEAR(P(j, k), g(X[j] - Y[k]), 1e-18 * g.peak() * 1.0001);
}

TEST(TpLinalg, SchoenbergWhitneyExamples)
{
    const std::vector<double> a{0, 1}, b{5, 6}, c{0, 0.1};
    EXPECT_TRUE(sw_check(a, a, 1, 1));
    EXPECT_FALSE(sw_check(c, b, 1, 1));
    const std::vector<double> t{0, 1, 2};
    EXPECT_FALSE(sw_check(t, t, 2, 0));
    EXPECT_EQ(code_of([&] { sw_check(a, t, 1, 1); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code_of([&] { sw_check(a, a, 1, 0); }), ErrorCode::TypeTooSmall);
}

TEST(TpLinalg, DeterminantClassificationExamples)
{
    const auto g = two_sided_exponential();
    const std::vector<double> a{0, 1}, b{5, 6}, c{0, 0.1}, z{0};
    const auto d = det_sign_oracle(g, a, a);
    EXPECT_EQ(d.sign, DetSign::Positive);
    EXPECT_NEAR(d.det, 1 - std::exp(-2.0), 1e-15);
    const auto e = det_sign_oracle(g, c, b);
    EXPECT_EQ(e.sign, DetSign::Zero);
    EXPECT_LE(std::abs(e.det), e.threshold);
    EXPECT_EQ(det_sign_oracle(g, z, z).sign, DetSign::Positive);
}

TEST(TpLinalg, SchoenbergWhitneyEquivalenceRandomized)
{
    std::mt19937_64 rng(2024);
    for (const auto& g : {two_sided_exponential(), make_tp(1, 0, {1, 0.5})}) {
        int checked = 0;
        while (checked < 600) {
            const std::size_t n = 1 + rng() % 5;
            auto x = random_sorted(rng, n), y = random_sorted(rng, n);
            if (x.size() != n || y.size() != n)
                continue;
            ++checked;
            const auto d = det_sign_oracle(g, x, y);
            EXPECT_EQ(d.sign == DetSign::Positive, sw_check(x, y, g.m(), g.n()));
            // independent determinant
            oracle::Matrix a(n, std::vector<double>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a[i][j] = g(x[i] - y[j]);
            EXPECT_NEAR(oracle::det_cofactor(a), d.det, 1e-13);
        }
    }
}

TEST(TpLinalg, SelectionExampleOfStepOne)
{
    const auto g = two_sided_exponential();
    const auto X = PointSequence::uniform(0.25, 0.5, -100, 100);
    const auto Y = PointSequence::uniform(0, 1, -50, 50);
    const auto sel = select_submatrix(g, X, Y, 0, 2);
    EXPECT_EQ(sel.N, 4);
    EXPECT_EQ(sel.k1, -2);
    EXPECT_EQ(sel.k2, 1);
    EXPECT_EQ(sel.target, 2);
    EXPECT_TRUE(sw_check(sel.xi, sel.eta, 1, 1));
    for (std::size_t l = 0; l < sel.eta.size(); ++l)
        EXPECT_DOUBLE_EQ(sel.eta[l], Y[sel.k1 + static_cast<Index>(l)]);
    for (std::size_t a = 0; a < sel.xi.size(); ++a)
        EXPECT_DOUBLE_EQ(sel.xi[a], X[sel.sample_indices[a]]);
}

TEST(TpLinalg, TwoByTwoCaseMatchesClosedFormInverse)
{
    // m = 0, n = 1: g(t) = e^{t} on t < 0
    const auto g = make_tp(1, 0, {-1});
    const auto X = PointSequence::uniform(0.3, 0.45, -60, 60);
    const auto Y = PointSequence::uniform(0, 1, -20, 20);
    for (Index k : {-3, 0, 4}) {
        const auto sel = select_submatrix(g, X, Y, k, 1);
        ASSERT_EQ(sel.N, 2);
        EXPECT_EQ(sel.k1, k);
        EXPECT_EQ(sel.k2, k + 1);
        EXPECT_EQ(sel.sample_indices[0], X.last_below(Y[k]));
        EXPECT_EQ(sel.sample_indices[1], X.first_above(Y[k]));
        const double x1 = sel.xi[0], x2 = sel.xi[1];
        const auto inv = oracle::inverse_2x2(g(x1 - Y[k]), g(x1 - Y[k + 1]), g(x2 - Y[k]), g(x2 - Y[k + 1]));
        const auto row = left_inverse_row(g, sel, X, Y);
        // the row belonging to the node y_k
        EXPECT_NEAR(row.values[0], inv[0][0], 1e-12 * std::abs(inv[0][0]));
        EXPECT_NEAR(row.values[1], inv[0][1], 1e-12 * std::abs(inv[0][1]));
        EXPECT_LE(row_identity_residual(g, row, X, Y), 1e-10);
    }
}

TEST(TpLinalg, LeftInverseRowsOnUniformAndJitteredSets)
{
    struct Case {
        TPFiniteType g;
        int r;
    };
    const std::vector<Case> cases = {
        {two_sided_exponential(), 2},
        {make_tp(1, 0, {1, 0.5}), 2},
        {make_tp(1, 0, {-1, -0.5, -2}), 2},
        {make_tp(0.5, 0.2, {1, -1, 0.5}), 3},
        {make_tp(1, 0, {1, 1, -0.5}), 2},
    };
    const auto Y = PointSequence::uniform(0, 1, -60, 60);
    const std::vector<PointSequence> sets = {
        PointSequence::uniform(0.1, 0.5, -200, 200),
        PointSequence::uniform(0.37, 0.45, -200, 200),
        jittered_samples({0.55, 0.4, -120, 120, 5}),
    };
    for (const auto& c : cases)
        for (const auto& X : sets) {
            ASSERT_TRUE(condition_Cr(X, Y, c.r));
            for (Index k = -8; k <= 8; ++k) {
                const auto sel = select_submatrix(c.g, X, Y, k, c.r);
                // interlacing holds against the translated nodes y + delta
                std::vector<double> eta = sel.eta;
                for (double& y : eta)
                    y += c.g.shift();
                EXPECT_TRUE(sw_check(sel.xi, eta, c.g.m(), c.g.n()));
                const auto row = left_inverse_row(c.g, sel, X, Y);
                EXPECT_LE(row_identity_residual(c.g, row, X, Y), 1e-8);
                EXPECT_TRUE(obeys_support_law(sel, row, X));
                EXPECT_LE(row.cols.size(), static_cast<std::size_t>(sel.N));
                // support law with explicit node bounds (m = 0 uses y_{k-1})
                const double lo = (c.g.m() > 0 ? Y[k - c.r * c.g.m()] : Y[k - 1]) + c.g.shift();
                const double hi = (c.g.n() > 0 ? Y[k + c.r * c.g.n()] : Y[k + 1]) + c.g.shift();
                for (Index j : row.cols) {
                    EXPECT_GE(X[j], lo);
                    EXPECT_LE(X[j], hi);
                }
            }
        }
}

TEST(TpLinalg, ConditionCrExamples)
{
    const auto Y = PointSequence::uniform(0, 1, -30, 30);
    EXPECT_TRUE(condition_Cr(PointSequence::uniform(0, 0.4, -100, 100), Y, 1));
    for (int r : {1, 2, 5})
        EXPECT_FALSE(condition_Cr(PointSequence::uniform(0, 1, -100, 100), Y, r));
    for (double ab : {0.5, 0.6, 0.75, 0.8, 0.9}) {
        const int r = static_cast<int>(std::floor(1 / (1 - ab) + 1e-9));
        EXPECT_TRUE(condition_Cr(PointSequence::uniform(0.123, ab, -200, 200), Y, r)) << ab;
    }
}

TEST(TpLinalg, ConditionCrViolationIsReported)
{
    const auto g = two_sided_exponential();
    const auto X = PointSequence::uniform(0, 1, -50, 50);
    const auto Y = PointSequence::uniform(0, 1, -20, 20);
    EXPECT_EQ(code_of([&] { select_submatrix(g, X, Y, 0, 1); }), ErrorCode::ConditionCrViolated);
}

TEST(TpLinalg, SingularSubmatrixIsReported)
{
    const auto g = two_sided_exponential();
    const auto X = PointSequence::uniform(0.25, 0.5, -100, 100);
    const auto Y = PointSequence::uniform(0, 1, -50, 50);
    auto sel = select_submatrix(g, X, Y, 0, 2);
    sel.xi[1] = sel.xi[0];
    EXPECT_EQ(code_of([&] { left_inverse_row(g, sel); }), ErrorCode::SingularSubmatrix);
}

TEST(TpLinalg, SchurBoundExamples)
{
    EXPECT_DOUBLE_EQ(schur_constant(3, 2.0), 10.0);
    std::vector<BandRow> rows;
    for (int i = 0; i < 5; ++i)
        rows.push_back({i, {i % 2 ? -1.5 : 1.5}});
    const BandedMatrix diag(0, 4, 0, 4, rows);
    EXPECT_DOUBLE_EQ(schur_bound(diag), 1.5);
    EXPECT_NEAR(oracle::power_norm(dense(diag)), 1.5, 1e-12);

    std::vector<BandRow> bad{{0, {std::numeric_limits<double>::infinity()}}};
    EXPECT_EQ(code_of([&] { schur_bound(BandedMatrix(0, 0, 0, 0, bad)); }), ErrorCode::UnboundedEntries);
}

TEST(TpLinalg, LeftInverseIdentityAndNormDomination)
{
    const auto g = two_sided_exponential();
    const auto Y = PointSequence::uniform(0, 1, -40, 40);
    for (const auto& X : {PointSequence::uniform(0.2, 0.5, -150, 150), jittered_samples({0.6, 0.45, -100, 100, 9})}) {
        const auto gamma = build_left_inverse(g, X, Y, 2, -20, 20);
        const auto P = assemble_kernel_matrix(g, X, Y.with_window(-20, 20));
        const Eigen::MatrixXd defect = gamma.to_dense() * P.to_dense() - Eigen::MatrixXd::Identity(41, 41);
        EXPECT_LE(defect.cwiseAbs().maxCoeff(), 1e-8);
        EXPECT_LE(oracle::power_norm(dense(gamma)), schur_bound(gamma) * (1 + 1e-12));
        EXPECT_LE(gamma.max_row_nonzeros(), 4u);
    }
}

TEST(TpLinalg, RowsDoNotDependOnWindow)
{
    const auto g = make_tp(1, 0, {1, -0.5});
    const auto Y = PointSequence::uniform(0, 1, -40, 40);
    const auto a = build_left_inverse(g, PointSequence::uniform(0.1, 0.3, -100, 100), Y, 3, -5, 5);
    const auto b = build_left_inverse(g, PointSequence::uniform(0.1, 0.3, -300, 300), Y.with_window(-80, 80), 3, -5, 5);
    for (Index k = -5; k <= 5; ++k)
        for (Index j = -100; j <= 100; ++j)
            EXPECT_EQ(a(k, j), b(k, j));
}

TEST(TpLinalg, BandedMatrixSerialization)
{
    const BandedMatrix a(1, 2, 0, 3, {{0, {1.5, 0.0}}, {2, {-0.25, 1.0 / 3.0}}});
    const auto j = a.to_json();
    EXPECT_EQ(j["row_window"], nlohmann::json({1, 2}));
    EXPECT_EQ(j["rows"][1]["band"], nlohmann::json({2, 3}));
    std::ostringstream os;
    a.write_triplets(os);
    EXPECT_EQ(os.str(), "row,col,value\n1,0,1.5\n2,2,-0.25\n2,3,0.33333333333333331\n");
    EXPECT_EQ(a(1, 1), 0.0);
    EXPECT_EQ(a(2, 0), 0.0);
}

TEST(TpLinalg, SchurTestBoundsNorm)
{
    const auto g = two_sided_exponential();
    const auto P = assemble_kernel_matrix(g, PointSequence::uniform(0.1, 0.5, -60, 60), PointSequence::uniform(0, 1, -20, 20));
    const double norm = oracle::power_norm(dense(P));
    EXPECT_LE(norm, schur_test(P) * (1 + 1e-12));
    EXPECT_LE(schur_test(P), schur_bound(P) * (1 + 1e-12));
    // for e^{-|t|} on 0.5 Z against Z the column sums approach sum_j e^{-|j|/2}
    double col = 0;
    for (int j = -200; j <= 200; ++j)
        col += std::exp(-std::abs(0.1 + 0.5 * j));
    EXPECT_GT(schur_test(P), 0.5 * std::sqrt(col));
}

TEST(TpLinalg, FirstColumnConvention)
{
    // k1 = k - (r + 1) m + 1; the alternative k - r (m + 1) + 1 agrees with it for m = 1 only when r = 1
    const auto g = two_sided_exponential();
    const auto Y = PointSequence::uniform(0, 1, -30, 30);
    const auto X1 = PointSequence::uniform(0.25, 0.45, -100, 100);
    for (int r : {1, 2, 3}) {
        const auto X = r == 1 ? PointSequence::uniform(0.25, 0.5, -100, 100) : X1;
        for (Index k = -3; k <= 3; ++k) {
            const auto sel = select_submatrix(g, X, Y, k, r);
            EXPECT_EQ(sel.k1, k - (r + 1) * g.m() + 1);
            if (r == 1) {
                EXPECT_EQ(sel.k1, k - r * (g.m() + 1) + 1);
            }
        }
    }
}
