#pragma once

#include <boost/math/special_functions/legendre.hpp>

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

namespace tpgabor {

/// Gauss–Legendre rule on [-1, 1]. Nodes come from Boost's Legendre zeros,
/// weights from 2 / ((1 - x^2) P_n'(x)^2).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(unsigned order)
    {
        const auto positive = boost::math::legendre_p_zeros<double>(static_cast<int>(order));
        nodes.reserve(order);
        weights.reserve(order);
        auto push = [&](double x) {
            const double dp = boost::math::legendre_p_prime<double>(static_cast<int>(order), x);
            nodes.push_back(x);
            weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
        };
        // legendre_p_zeros returns the nonnegative zeros in increasing order
        for (auto it = positive.rbegin(); it != positive.rend(); ++it)
            if (*it != 0.0)
                push(-*it);
        for (double x : positive)
            push(x);
    }

    std::size_t size() const { return nodes.size(); }

    /// Integrate f over [a, b].
    template <class F>
    auto integrate(F&& f, double a, double b) const
    {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        decltype(f(mid)) sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            sum += weights[i] * f(mid + half * nodes[i]);
        return sum * half;
    }
};

/// Rules are expensive to build for large orders; share them.
inline const GaussLegendre& gauss_legendre(unsigned order)
{
    static std::mutex mutex;
    static std::map<unsigned, GaussLegendre> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, GaussLegendre(order)).first;
    return it->second;
}

} // namespace tpgabor
