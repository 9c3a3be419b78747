#include "oracles.hpp"

#include "tpgabor/si_sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

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

// brute force C_r(eps): greedy X' and linear counting over every interval X spans
bool cr_oracle(const std::vector<double>& x, const std::vector<double>& y, int r, double eps)
{
    std::vector<double> kept;
    for (double p : x)
        if (kept.empty() || p - kept.back() >= eps)
            kept.push_back(p);
    auto count = [&](double a, double b) {
        int c = 0;
        for (double p : kept)
            c += (p > a && p < b) ? 1 : 0;
        return c;
    };
    bool examined = false;
    for (std::size_t k = 0; k + 1 < y.size(); ++k)
        if (x.front() <= y[k] && x.back() >= y[k + 1]) {
            examined = true;
            if (count(y[k] + eps, y[k + 1] - eps) < 1)
                return false;
        }
    for (std::size_t k = 0; k + static_cast<std::size_t>(r) < y.size(); ++k)
        if (x.front() <= y[k] && x.back() >= y[k + static_cast<std::size_t>(r)])
            if (count(y[k] + eps, y[k + static_cast<std::size_t>(r)] - eps) < r + 1)
                return false;
    return examined;
}

struct JitterCase {
    TPFiniteType g = two_sided_exponential();
    PointSequence X = jittered_samples({0.8, 0.0, -70, 70, 42});
    PointSequence Y = PointSequence::uniform(0.0, 1.0, -40, 40);
    SamplingConfig cfg;

    JitterCase()
    {
        const auto adm = max_gap_admissible(X, 1.0);
        cfg = {adm.r, adm.epsilon};
    }
};

std::vector<double> random_coefficients(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N;
    std::vector<double> c(n);
    for (auto& v : c)
        v = N(rng);
    return c;
}

double norm2(const std::vector<double>& v)
{
    double s = 0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

} // namespace

TEST(SiSampling, QuasiUniformParams)
{
    const std::vector<double> y{0.0, 0.5, 1.7, 2.0};
    const auto [q, Q] = quasi_uniform_params(std::span<const double>(y));
    EXPECT_DOUBLE_EQ(q, 2.0 - 1.7);
    EXPECT_DOUBLE_EQ(Q, 1.2);
    const auto u = quasi_uniform_params(PointSequence::uniform(0, 0.25, -4, 4));
    EXPECT_EQ(u.first, 0.25);
    EXPECT_EQ(u.second, 0.25);
    const std::vector<double> bad{0.0, 0.0};
    EXPECT_EQ(code_of([&] { quasi_uniform_params(std::span<const double>(bad)); }), ErrorCode::NonIncreasingSequence);
}

TEST(SiSampling, ConditionCrEpsExamples)
{
    const auto Y = PointSequence::uniform(0, 1, -20, 20);
    EXPECT_TRUE(condition_Cr_eps(PointSequence::uniform(0, 0.4, -60, 60), Y, {2, 0.05}));
    EXPECT_FALSE(condition_Cr_eps(PointSequence::uniform(0.5, 1.0, -30, 30), Y, {1, 0.4}));
    // eps must lie in (0, q / 2)
    EXPECT_FALSE(condition_Cr_eps(PointSequence::uniform(0, 0.1, -300, 300), Y, {2, 0.5}));
    EXPECT_FALSE(condition_Cr_eps(PointSequence::uniform(0, 0.1, -300, 300), Y, {2, 0.0}));
}

TEST(SiSampling, ConditionCrEpsMatchesBruteForce)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.3, 0.95);
    const auto Yseq = PointSequence::uniform(0.1, 1.0, -15, 15);
    const auto y = Yseq.values();
    for (int trial = 0; trial < 200; ++trial) {
        const double gap = U(rng);
        const auto X = jittered_samples({gap, 0.0, -30, 30, static_cast<std::uint64_t>(trial)});
        const int r = 1 + trial % 4;
        const double eps = 0.02 + 0.4 * (trial % 7) / 7.0;
        EXPECT_EQ(condition_Cr_eps(X, Yseq, {r, eps}), cr_oracle(X.values(), y, r, eps)) << trial;
    }
}

TEST(SiSampling, SmallerEpsilonKeepsCondition)
{
    const JitterCase s;
    ASSERT_TRUE(condition_Cr_eps(s.X, s.Y, s.cfg));
    for (double f : {0.9, 0.5, 0.25, 0.1})
        EXPECT_TRUE(condition_Cr_eps(s.X, s.Y, {s.cfg.r, s.cfg.epsilon * f}));
}

TEST(SiSampling, MaxGapAdmissibility)
{
    const auto a = max_gap_admissible(PointSequence::uniform(0, 1.5, -40, 40), 2.0);
    EXPECT_TRUE(a.ok);
    EXPECT_DOUBLE_EQ(a.epsilon, 0.25);
    EXPECT_EQ(a.r, 5);
    EXPECT_TRUE(condition_Cr_eps(PointSequence::uniform(0, 1.5, -40, 40), PointSequence::uniform(0, 2, -20, 20), {a.r, a.epsilon}));
    EXPECT_FALSE(max_gap_admissible(PointSequence::uniform(0, 1.5, -40, 40), 1.0).ok);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto X = jittered_samples({0.9, 0.0, -40, 40, seed});
        EXPECT_LT(X.mesh(), 0.9);
        const auto adm = max_gap_admissible(X, 1.0);
        ASSERT_TRUE(adm.ok);
        EXPECT_TRUE(cr_oracle(X.values(), PointSequence::uniform(0, 1, -25, 25).values(), adm.r, adm.epsilon)) << seed;
    }
}

TEST(SiSampling, JitterIsDeterministic)
{
    const auto a = jittered_samples({0.8, 0.0, -10, 10, 9});
    const auto b = jittered_samples({0.8, 0.0, -10, 10, 9});
    EXPECT_EQ(a.values(), b.values());
    EXPECT_NE(a.values(), jittered_samples({0.8, 0.0, -10, 10, 10}).values());
    EXPECT_EQ(code_of([] { jittered_samples({0.8, 0.3, -10, 10, 1}); }), ErrorCode::InvalidArgument);
}

TEST(SiSampling, EvaluateSignal)
{
    const auto Y = PointSequence::uniform(0, 1, -3, 3);
    std::vector<double> c(7, 0.0);
    c[3] = c[4] = 1.0;
    const SISignal f{two_sided_exponential(), Y, c};
    EXPECT_NEAR(evaluate_signal(f, 0.5), 2 * std::exp(-0.5), 1e-15);
    EXPECT_NEAR(evaluate_signal(f, -2.0), std::exp(-2.0) + std::exp(-3.0), 1e-15);
}

TEST(SiSampling, RoundTripRecoversCoefficients)
{
    const JitterCase s;
    const auto inv = sampling_left_inverse(s.g, s.X, s.Y, s.cfg);
    EXPECT_LE(inv.certified_lo, -30);
    EXPECT_GE(inv.certified_hi, 30);
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SISignal f{s.g, s.Y, random_coefficients(s.Y.size(), seed)};
        const auto rec = reconstruct(inv, sample_signal(f, s.X));
        double err = 0, ref = 0;
        for (Index k = inv.certified_lo; k <= inv.certified_hi; ++k) {
            const auto i = static_cast<std::size_t>(k - s.Y.lo());
            ASSERT_TRUE(rec.certified[i]);
            err = std::max(err, std::abs(rec.coefficients[i] - f.c[i]));
            ref = std::max(ref, std::abs(f.c[i]));
        }
        worst = std::max(worst, err / ref);
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(SiSampling, RoundTripOtherWindows)
{
    // P_k grows with r and M, so the denser set keeps the order-4 window well conditioned
    const std::vector<std::pair<TPFiniteType, double>> cases = {{make_tp(1, 0, {1, 0.5, -0.7}), 0.7},
                                                                {make_tp(2, 0.2, {0.6, 0.6, -0.4, -1}), 0.5}};
    for (const auto& [g, gap] : cases) {
        const auto X = jittered_samples({gap, 0.0, -120, 120, 3});
        const auto Y = PointSequence::uniform(0.25, 1.0, -30, 30);
        const auto adm = max_gap_admissible(X, 1.0);
        ASSERT_TRUE(adm.ok);
        const auto inv = sampling_left_inverse(g, X, Y, {adm.r, adm.epsilon});
        const SISignal f{g, Y, random_coefficients(Y.size(), 99)};
        const auto rec = reconstruct(inv, sample_signal(f, X));
        for (Index k = inv.certified_lo; k <= inv.certified_hi; ++k) {
            const auto i = static_cast<std::size_t>(k - Y.lo());
            EXPECT_NEAR(rec.coefficients[i], f.c[i], 1e-8);
        }
    }
}

TEST(SiSampling, ZeroSamplesGiveZeroCoefficients)
{
    const JitterCase s;
    const auto rec = reconstruct(s.g, s.X, s.Y, s.cfg, std::vector<double>(s.X.size(), 0.0));
    for (double c : rec.coefficients)
        EXPECT_EQ(c, 0.0);
}

TEST(SiSampling, NoiseIsBoundedBySchurConstant)
{
    const JitterCase s;
    const auto inv = sampling_left_inverse(s.g, s.X, s.Y, s.cfg);
    const double schur = inv.schur();
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(-1e-3, 1e-3);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> e(s.X.size());
        for (auto& v : e)
            v = U(rng);
        const auto c = reconstruct(inv, e).coefficients;
        EXPECT_LE(norm2(c), schur * norm2(e) * (1 + 1e-12));
    }
    // Schur bound dominates the spectral norm of Gamma
    oracle::Matrix m;
    const auto d = inv.gamma.to_dense();
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        m.emplace_back();
        for (Eigen::Index j = 0; j < d.cols(); ++j)
            m.back().push_back(d(i, j));
    }
    EXPECT_LE(oracle::power_norm(m), schur * (1 + 1e-9));
}

TEST(SiSampling, SamplingInequality)
{
    // A ||c||^2 <= ||f||^2 <= B ||c||^2 and ||c|| <= schur ||f(X)|| on certified coefficients
    const JitterCase s;
    const auto inv = sampling_left_inverse(s.g, s.X, s.Y, s.cfg);
    const auto rb = riesz_bounds(s.g, s.Y);
    std::vector<double> c(s.Y.size(), 0.0);
    const auto rnd = random_coefficients(s.Y.size(), 4);
    for (Index k = -20; k <= 20; ++k)
        c[static_cast<std::size_t>(k - s.Y.lo())] = rnd[static_cast<std::size_t>(k - s.Y.lo())];
    const SISignal f{s.g, s.Y, c};
    const double l2 = std::sqrt(oracle::composite([&](double t) { return std::pow(evaluate_signal(f, t), 2); }, -60, 60, 0.5));
    const double cn = norm2(c);
    EXPECT_GE(l2 * l2, rb.lower * cn * cn * (1 - 1e-8));
    EXPECT_LE(l2 * l2, rb.upper * cn * cn * (1 + 1e-8));
    EXPECT_LE(cn, inv.schur() * norm2(sample_signal(f, s.X)));
}

TEST(SiSampling, RieszBoundsUniformClosedForm)
{
    // periodization of |g^|^2 equals sum_k a(k) e^{-2 pi i k xi}, a(t) = (1 + |t|) e^{-|t|};
    // extremes are at xi = 0 and xi = 1/2
    double up = 0, lo = 0;
    for (int k = -400; k <= 400; ++k) {
        const double a = (1 + std::abs(k)) * std::exp(-std::abs(k));
        up += a;
        lo += (k % 2 == 0 ? 1 : -1) * a;
    }
    const auto rb = riesz_bounds(two_sided_exponential(), PointSequence::uniform(0, 1, -10, 10));
    EXPECT_NEAR(rb.lower, lo, 1e-9 * up);
    EXPECT_NEAR(rb.upper, up, 1e-9 * up);
    // finite Gram sections of a tabulated copy sit inside
    std::vector<double> pts;
    for (int k = -40; k <= 40; ++k)
        pts.push_back(k);
    const auto table = riesz_bounds(two_sided_exponential(), PointSequence::table(-40, pts));
    EXPECT_GE(table.lower, lo * (1 - 1e-9));
    EXPECT_LE(table.upper, up * (1 + 1e-9));
    EXPECT_LT(table.lower, lo * 1.01);
    EXPECT_GT(table.upper, up * 0.99);
}

TEST(SiSampling, ErrorsAreTyped)
{
    const auto Y = PointSequence::uniform(0, 1, -10, 10);
    EXPECT_EQ(code_of([&] { sampling_left_inverse(make_tp(1, 0, {1}), PointSequence::uniform(0, 0.3, -40, 40), Y, {2, 0.1}); }),
              ErrorCode::TypeTooSmall);
    EXPECT_EQ(code_of([&] { sampling_left_inverse(two_sided_exponential(), PointSequence::uniform(0.5, 1, -40, 40), Y, {1, 0.4}); }),
              ErrorCode::ConditionViolated);
    const auto tiny = PointSequence::table(0, {-0.1, 0.1, 0.3, 0.5, 0.7, 0.9, 1.1});
    EXPECT_EQ(code_of([&] { sampling_left_inverse(two_sided_exponential(), tiny, PointSequence::uniform(0, 1, 0, 1), {1, 0.05}); }),
              ErrorCode::WindowTooSmall);
}

TEST(SiSampling, LoadSamplesCsv)
{
    const auto path = std::filesystem::temp_directory_path() / "tpgabor_samples_test.csv";
    {
        std::ofstream os(path);
        os << "# comment\nindex,position,value\n-1,-0.5,1.25\n0,0.125,2\n1,0.75,-3\n";
    }
    const auto t = load_samples_csv(path.string());
    EXPECT_EQ(t.points.lo(), -1);
    EXPECT_EQ(t.points.values(), (std::vector<double>{-0.5, 0.125, 0.75}));
    EXPECT_EQ(t.values, (std::vector<double>{1.25, 2, -3}));
    {
        std::ofstream os(path);
        os << "index,position\n0,0.5\n2,0.7\n";
    }
    EXPECT_EQ(code_of([&] { load_samples_csv(path.string()); }), ErrorCode::InvalidArgument);
    {
        std::ofstream os(path);
        os << "index,position\n0,0.5\n1,0.4\n";
    }
    EXPECT_EQ(code_of([&] { load_samples_csv(path.string()); }), ErrorCode::NonIncreasingSequence);
    std::filesystem::remove(path);
}

TEST(SiSampling, ReconstructionCsv)
{
    const JitterCase s;
    const auto rec = reconstruct(s.g, s.X, s.Y, s.cfg, std::vector<double>(s.X.size(), 1.0));
    std::ostringstream os;
    write_reconstruction_csv(os, rec, s.Y);
    std::istringstream in(os.str());
    const auto t = read_csv(in);
    EXPECT_EQ(t.header, (std::vector<std::string>{"index", "node", "coefficient", "certified"}));
    EXPECT_EQ(t.rows.size(), s.Y.size());
}
