#pragma once

// Totally positive functions of finite type.
//
// A window g is described by the reciprocal of its two-sided Laplace
// transform, C e^{delta s} prod_v (1 + delta_v s). Every factor with
// delta_v > 0 contributes a right-sided exponential, every factor with
// delta_v < 0 a left-sided one, and g is their convolution scaled by 1/C and
// shifted by delta. Evaluation goes through the partial-fraction expansion of
// prod_v (1 + delta_v s)^{-1}; repeated factors give confluent terms
// t^p e^{-t/delta_v}.

#include "tpgabor/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace tpgabor {

/// Values below this are returned as exact zeros.
inline constexpr double kernel_underflow = 1e-300;

/// Relative level used to realize the (exponentially decaying) kernel on a
/// finite interval; entries g(t) below kernel_cutoff * max g are discarded by
/// banded assembly.
inline constexpr double kernel_cutoff = 1e-18;

class TPFiniteType {
public:
    static TPFiniteType make(double scale_C, double shift_delta, std::vector<double> deltas)
    {
        if (deltas.empty())
            fail(ErrorCode::EmptyFactorList, "at least one factor (1 + delta_v s) is required");
        if (!(scale_C > 0.0) || !std::isfinite(scale_C))
            fail(ErrorCode::NonpositiveScale, "scale C must be a positive finite number");
        if (!std::isfinite(shift_delta))
            fail(ErrorCode::InvalidArgument, "shift delta must be finite");
        for (double d : deltas) {
            if (d == 0.0)
                fail(ErrorCode::ZeroDelta, "factor with delta_v = 0 is degenerate");
            if (!std::isfinite(d))
                fail(ErrorCode::InvalidArgument, "delta_v must be finite");
        }
        TPFiniteType g;
        g.scale_ = scale_C;
        g.shift_ = shift_delta;
        g.deltas_ = std::move(deltas);
        for (double d : g.deltas_)
            (d > 0.0 ? g.m_ : g.n_) += 1;
        g.expand();
        g.locate_support();
        return g;
    }

    double scale() const { return scale_; }
    double shift() const { return shift_; }
    const std::vector<double>& deltas() const { return deltas_; }

    /// Number of positive factors.
    int m() const { return m_; }
    /// Number of negative factors.
    int n() const { return n_; }
    /// The type M = m + n.
    int order() const { return m_ + n_; }

    double evaluate(double t) const
    {
        const double u = t - shift_;
        if (std::isnan(u))
            return std::numeric_limits<double>::quiet_NaN();
        const bool right = u >= 0.0;
        double sum = 0.0;
        for (const auto& pole : poles_) {
            if (pole.right != right)
                continue;
            double poly = 0.0;
            for (std::size_t q = pole.poly.size(); q-- > 0;)
                poly = poly * u + pole.poly[q];
            sum += poly * std::exp(pole.rate * u);
        }
        if (!(sum >= kernel_underflow))
            return 0.0;
        return sum;
    }

    double operator()(double t) const { return evaluate(t); }

    /// e^{-2 pi i delta xi} / (C prod_v (1 + 2 pi i delta_v xi)).
    std::complex<double> fourier(double xi) const
    {
        using namespace std::complex_literals;
        const double w = 2.0 * std::numbers::pi * xi;
        std::complex<double> den = scale_;
        for (double d : deltas_)
            den *= 1.0 + 1i * (d * w);
        return std::exp(-1i * (shift_ * w)) / den;
    }

    /// Interval outside of which g < kernel_cutoff * max g.
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }
    double peak() const { return peak_; }

    /// t -> g(-t), again of finite type with m and n exchanged.
    TPFiniteType reflected() const
    {
        std::vector<double> neg(deltas_.size());
        std::transform(deltas_.begin(), deltas_.end(), neg.begin(), [](double d) { return -d; });
        return make(scale_, -shift_, std::move(neg));
    }

    /// a(tau) = int g(t) g(t - tau) dt. The product of the Laplace transforms
    /// of g and g(-.) is again of finite type with factors {delta_v, -delta_v}.
    TPFiniteType autocorrelation() const
    {
        std::vector<double> all = deltas_;
        for (double d : deltas_)
            all.push_back(-d);
        return make(scale_ * scale_, 0.0, std::move(all));
    }

    friend bool operator==(const TPFiniteType& a, const TPFiniteType& b)
    {
        return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.deltas_ == b.deltas_;
    }

private:
    TPFiniteType() = default;

    // term: sum_q poly[q] u^q e^{rate u}, on u >= 0 (right) or u < 0 (left)
    struct Pole {
        double rate = 0.0;
        bool right = true;
        std::vector<double> poly;
    };

    void expand()
    {
        // group equal factors; pole of 1/(1 + a s) sits at s = -1/a
        std::vector<std::pair<double, int>> groups;
        for (double a : deltas_) {
            auto it = std::find_if(groups.begin(), groups.end(), [a](const auto& p) { return p.first == a; });
            if (it == groups.end())
                groups.emplace_back(a, 1);
            else
                ++it->second;
        }
        // prod (1 + a s)^{-1} = K prod (s - p)^{-mu},  K = prod 1/a
        double K = 1.0;
        for (double a : deltas_)
            K /= a;

        poles_.clear();
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const double p_i = -1.0 / groups[i].first;
            const int mu = groups[i].second;

            // L^{(k)}(p_i) for h = prod_{j != i} (s - p_j)^{-mu_j}, L = h'/h
            std::vector<double> logder(static_cast<std::size_t>(mu), 0.0);
            for (std::size_t j = 0; j < groups.size(); ++j) {
                if (j == i)
                    continue;
                const double diff = p_i - (-1.0 / groups[j].first);
                double fact = 1.0;
                double pw = diff;
                for (int k = 0; k < mu; ++k) {
                    if (k > 0) {
                        fact *= k;
                        pw *= diff;
                    }
                    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                    logder[static_cast<std::size_t>(k)] += -groups[j].second * sign * fact / pw;
                }
            }
            // h^{(d)}(p_i), d = 0..mu-1, via h^{(d+1)} = sum_k binom(d,k) h^{(k)} L^{(d-k)}
            std::vector<double> hder(static_cast<std::size_t>(mu), 0.0);
            double h0 = 1.0;
            for (std::size_t j = 0; j < groups.size(); ++j)
                if (j != i)
                    h0 /= std::pow(p_i - (-1.0 / groups[j].first), groups[j].second);
            hder[0] = h0;
            for (int d = 0; d + 1 < mu; ++d) {
                double acc = 0.0;
                double binom = 1.0;
                for (int k = 0; k <= d; ++k) {
                    if (k > 0)
                        binom = binom * (d - k + 1) / k;
                    acc += binom * hder[static_cast<std::size_t>(k)] * logder[static_cast<std::size_t>(d - k)];
                }
                hder[static_cast<std::size_t>(d + 1)] = acc;
            }

            Pole pole;
            pole.rate = p_i;
            pole.right = p_i < 0.0;
            pole.poly.assign(static_cast<std::size_t>(mu), 0.0);
            const double side = pole.right ? 1.0 : -1.0;
            // A_q = h^{(mu-q)}(p_i) / (mu-q)!;  inverse of (s-p)^{-q} is u^{q-1}/(q-1)! e^{p u}
            for (int q = 1; q <= mu; ++q) {
                const int d = mu - q;
                double fd = 1.0;
                for (int t = 2; t <= d; ++t)
                    fd *= t;
                double fq = 1.0;
                for (int t = 2; t <= q - 1; ++t)
                    fq *= t;
                const double A = hder[static_cast<std::size_t>(d)] / fd;
                pole.poly[static_cast<std::size_t>(q - 1)] = side * K * A / fq / scale_;
            }
            poles_.push_back(std::move(pole));
        }
    }

    // sum of |terms| on one side, an upper bound for |g|
    double envelope(double u, bool right) const
    {
        double sum = 0.0;
        for (const auto& pole : poles_) {
            if (pole.right != right)
                continue;
            double poly = 0.0;
            const double au = std::abs(u);
            for (std::size_t q = pole.poly.size(); q-- > 0;)
                poly = poly * au + std::abs(pole.poly[q]);
            sum += poly * std::exp(pole.rate * u);
        }
        return sum;
    }

    void locate_support()
    {
        double scale_t = 0.0;
        for (double d : deltas_)
            scale_t = std::max(scale_t, std::abs(d));
        peak_ = 0.0;
        const int samples = 4000;
        const double span = 40.0 * scale_t * static_cast<double>(deltas_.size());
        for (int i = 0; i <= samples; ++i) {
            const double u = -span + 2.0 * span * i / samples;
            peak_ = std::max(peak_, evaluate(u + shift_));
        }
        const double level = kernel_cutoff * peak_;
        auto edge = [&](bool right) {
            double slowest = std::numeric_limits<double>::infinity();
            bool any = false;
            for (const auto& pole : poles_)
                if (pole.right == right) {
                    slowest = std::min(slowest, std::abs(pole.rate));
                    any = true;
                }
            if (!any)
                return 0.0;
            const double step = 0.5 / slowest;
            const double sgn = right ? 1.0 : -1.0;
            double u = step;
            while (!(envelope(sgn * u, right) < level && envelope(sgn * (u + step), right) < envelope(sgn * u, right)))
                u += step;
            double lo = u - step, hi = u;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (envelope(sgn * mid, right) < level ? hi : lo) = mid;
            }
            return sgn * hi;
        };
        support_hi_ = shift_ + edge(true);
        support_lo_ = shift_ + edge(false);
    }

    double scale_ = 1.0;
    double shift_ = 0.0;
    std::vector<double> deltas_;
    int m_ = 0;
    int n_ = 0;
    std::vector<Pole> poles_;
    double support_lo_ = 0.0;
    double support_hi_ = 0.0;
    double peak_ = 0.0;
};

inline TPFiniteType make_tp(double scale_C, double shift_delta, std::vector<double> deltas)
{
    return TPFiniteType::make(scale_C, shift_delta, std::move(deltas));
}

inline double evaluate(const TPFiniteType& g, double t) { return g.evaluate(t); }

inline std::complex<double> fourier(const TPFiniteType& g, double xi) { return g.fourier(xi); }

inline std::pair<int, int> type_counts(const TPFiniteType& g) { return {g.m(), g.n()}; }

/// The two-sided exponential e^{-|t|}.
inline TPFiniteType two_sided_exponential() { return make_tp(0.5, 0.0, {1.0, -1.0}); }

inline nlohmann::json to_json(const TPFiniteType& g)
{
    return nlohmann::json{{"C", g.scale()}, {"delta", g.shift()}, {"deltas", g.deltas()}};
}

inline TPFiniteType tp_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("C") || !j.contains("deltas"))
        fail(ErrorCode::InvalidArgument, "window must be an object with \"C\" and \"deltas\"");
    if (!j.at("C").is_number() || !j.at("deltas").is_array()
        || (j.contains("delta") && !j.at("delta").is_number()))
        fail(ErrorCode::InvalidArgument, "window fields have the wrong type");
    std::vector<double> deltas;
    for (const auto& d : j.at("deltas")) {
        if (!d.is_number())
            fail(ErrorCode::InvalidArgument, "deltas must be numbers");
        deltas.push_back(d.get<double>());
    }
    return make_tp(j.at("C").get<double>(), j.value("delta", 0.0), std::move(deltas));
}

} // namespace tpgabor
