#pragma once
/**
 * d-Schoenberg coefficients on the real sphere S^d.
 *
 * A continuous psi on [0, pi] with psi(0) = 1 is positive definite on S^d iff
 *
 *     psi(theta) = sum_n b_{n,d} c_n^{(d-1)/2}(cos theta),  b_{n,d} >= 0,  sum_n b_{n,d} = 1.
 *
 * For d >= 2 the coefficients are
 *     b_{n,d} = kappa(n,d) * int_0^pi psi(theta) C_n^{(d-1)/2}(cos theta) sin^{d-1}(theta) dtheta,
 * and for d = 1 they are the cosine-series coefficients
 *     b_{0,1} = (1/pi) int psi,   b_{n,1} = (2/pi) int psi(theta) cos(n theta).
 *
 * Integrals are taken with Gauss-Legendre in theta. For psi a polynomial in
 * cos(theta) the integrand is an entire trigonometric polynomial, so the rule
 * converges to roundoff with a modest margin over the degree.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gegenbauer.hpp"
#include "quadrature.hpp"

namespace schoenberg {

/// Entries above this negative value still count as nonnegative.
inline constexpr double kNegativeTolerance = 1e-12;
/// Allowed excess of the total mass over 1.
inline constexpr double kMassTolerance = 1e-10;
/// Excess of sum |b_n| over 1 that flags an under-resolved quadrature.
inline constexpr double kIllConditionedExcess = 1e-6;

/// A candidate member of Psi_d: psi on [0, pi] with psi(0) = 1.
struct IsotropicFunction {
    std::function<double(double)> eval;
    std::string label;

    double operator()(double theta) const { return eval(theta); }

    bool is_normalized(double tol = 1e-10) const { return std::abs(eval(0.0) - 1.0) <= tol; }
};

/// Truncated coefficient sequence b_{0,d}, ..., b_{N,d}.
///
/// `finite_support` says whether entries past the truncation are exactly zero
/// (a polynomial psi) or merely unknown (a truncation of an infinite expansion).
/// `valid_mass` certifies membership evidence for Psi_d: all entries >= -1e-12
/// and total mass <= 1 + 1e-10. Dimension walks may legitimately produce
/// sequences that fail it.
struct RealSchoenbergSequence {
    int d = 1;
    std::vector<double> coeffs;
    bool finite_support = true;
    bool valid_mass = false;

    RealSchoenbergSequence() = default;
    RealSchoenbergSequence(int dim, std::vector<double> values, bool finite = true)
        : d(dim), coeffs(std::move(values)), finite_support(finite)
    {
        if (dim < 1) {
            throw DomainError("dimension must be >= 1, got " + std::to_string(dim));
        }
        if (coeffs.empty()) {
            throw InvalidSequence("coefficient sequence must hold at least b_0");
        }
        refresh_validity();
    }

    int truncation() const noexcept { return static_cast<int>(coeffs.size()) - 1; }

    double at(int n) const noexcept
    {
        return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(n)] : 0.0;
    }

    double mass() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0.0); }

    double min_coeff() const
    {
        double m = coeffs.front();
        for (double b : coeffs) {
            m = std::min(m, b);
        }
        return m;
    }

    void refresh_validity()
    {
        valid_mass = min_coeff() >= -kNegativeTolerance && mass() <= 1.0 + kMassTolerance;
    }
};

/// kappa(n, d) = (2n+d-1) Gamma((d-1)/2)^2 / (2^{3-d} pi Gamma(d-1)), d >= 2.
inline double kappa(int n, int d)
{
    if (d < 2 || n < 0) {
        throw DomainError("kappa requires d >= 2 and n >= 0");
    }
    const double half = 0.5 * (d - 1);
    const double log_ratio = 2.0 * std::lgamma(half) - std::lgamma(double(d - 1)) + (d - 3) * std::numbers::ln2;
    return (2.0 * n + d - 1) * std::exp(log_ratio) / std::numbers::pi;
}

/// Output of compute_real_coeffs with the quadrature diagnostic.
struct RealCoefficients {
    RealSchoenbergSequence sequence;
    double absolute_mass = 0.0;
    bool ill_conditioned = false;
};

/// b_{0,d}, ..., b_{N,d} of psi by quadrature over theta in [0, pi].
/// The result is a truncation of the (generally infinite) expansion.
inline RealCoefficients compute_real_coeffs(const IsotropicFunction& psi, int d, int N, const QuadratureRule& rule)
{
    if (d < 1) {
        throw DomainError("dimension must be >= 1, got " + std::to_string(d));
    }
    if (N < 0) {
        throw DomainError("truncation must be >= 0");
    }
    if (rule.kind != QuadratureKind::IntervalLegendre || std::abs(rule.lower) > 1e-14 ||
        std::abs(rule.upper - std::numbers::pi) > 1e-14) {
        throw DomainError("compute_real_coeffs needs an interval rule on [0, pi]");
    }

    const auto count = static_cast<std::size_t>(N) + 1;
    std::vector<double> integrals(count, 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double theta = rule.nodes[i];
        const double u = std::cos(theta);
        double weight = rule.weights[i] * psi(theta);
        if (d == 1) {
            for (std::size_t n = 0; n < count; ++n) {
                integrals[n] += weight * std::cos(double(n) * theta);
            }
            continue;
        }
        weight *= std::pow(std::sin(theta), d - 1);
        // Unnormalized C_n via the normalized values times C_n(1).
        const auto c = normalized_gegenbauer_all<double>(static_cast<unsigned>(N), d, u);
        const double lambda = 0.5 * (d - 1);
        double at_one = 1.0;
        for (std::size_t n = 0; n < count; ++n) {
            if (n > 0) {
                at_one *= (double(n) + 2.0 * lambda - 1.0) / double(n);
            }
            integrals[n] += weight * c[n] * at_one;
        }
    }

    std::vector<double> b(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (d == 1) {
            b[n] = (n == 0 ? 1.0 : 2.0) / std::numbers::pi * integrals[n];
        } else {
            b[n] = kappa(static_cast<int>(n), d) * integrals[n];
        }
    }

    RealCoefficients out{RealSchoenbergSequence(d, std::move(b), false)};
    for (double v : out.sequence.coeffs) {
        out.absolute_mass += std::abs(v);
    }
    out.ill_conditioned = out.absolute_mass > 1.0 + kIllConditionedExcess;
    return out;
}

/// Same with the default rule size max(128, 2N+32).
inline RealCoefficients compute_real_coeffs(const IsotropicFunction& psi, int d, int N)
{
    return compute_real_coeffs(psi, d, N, theta_rule(default_theta_nodes(static_cast<std::size_t>(std::max(N, 0)))));
}

/// sum_{n<=N} b_{n,d} c_n^{(d-1)/2}(cos theta), or the cosine series for d = 1.
inline double reconstruct(const RealSchoenbergSequence& seq, double theta)
{
    const double u = std::cos(theta);
    const auto basis = normalized_gegenbauer_all<double>(static_cast<unsigned>(seq.truncation()), seq.d, u);
    double sum = 0.0;
    // Sum from the tail so small high-order terms are not swamped.
    for (std::size_t n = seq.coeffs.size(); n-- > 0;) {
        sum += seq.coeffs[n] * basis[n];
    }
    return sum;
}

/// psi as an IsotropicFunction backed by the truncated expansion.
inline IsotropicFunction as_function(RealSchoenbergSequence seq, std::string label = "reconstructed")
{
    return {[s = std::move(seq)](double theta) { return reconstruct(s, theta); }, std::move(label)};
}

} // namespace schoenberg
