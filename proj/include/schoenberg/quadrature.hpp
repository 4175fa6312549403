#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"

namespace schoenberg {

enum class QuadratureKind { IntervalLegendre, DiskProduct };

/// Gauss-Legendre rule on an interval [lower, upper].
struct QuadratureRule {
    QuadratureKind kind = QuadratureKind::IntervalLegendre;
    double lower = -1.0;
    double upper = 1.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }

    template <typename F>
    auto integrate(F&& f) const
    {
        decltype(f(0.0)) sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(nodes[i]);
        }
        return sum;
    }
};

/// n-point Gauss-Legendre nodes/weights on [lower, upper].
///
/// Newton iteration on P_n from the Tricomi initial guess; the derivative
/// comes from the same recurrence. Accurate to roundoff for n up to a few thousand.
inline QuadratureRule gauss_legendre(std::size_t n, double lower = -1.0, double upper = 1.0)
{
    if (n == 0) {
        throw DomainError("Gauss-Legendre rule needs at least one node");
    }
    if (!(upper > lower)) {
        throw DomainError("Gauss-Legendre interval must have upper > lower");
    }
    QuadratureRule rule;
    rule.lower = lower;
    rule.upper = upper;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double half_width = 0.5 * (upper - lower);
    const double mid = 0.5 * (upper + lower);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
            p0 = p1;
            p1 = p2;
        }
        dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        rule.nodes[i] = mid - half_width * x;
        rule.nodes[n - 1 - i] = mid + half_width * x;
        rule.weights[i] = half_width * w;
        rule.weights[n - 1 - i] = half_width * w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = mid;
    }
    return rule;
}

/// Gauss-Legendre rule in the angle theta on [0, pi].
inline QuadratureRule theta_rule(std::size_t n)
{
    return gauss_legendre(n, 0.0, std::numbers::pi);
}

/// Default node count for a degree-N coefficient computation.
inline std::size_t default_theta_nodes(std::size_t N)
{
    return std::max<std::size_t>(128, 2 * N + 32);
}

} // namespace schoenberg
