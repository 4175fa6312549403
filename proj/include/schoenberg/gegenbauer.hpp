#pragma once
/**
 * Gegenbauer (ultraspherical) polynomials C_n^lambda, their values at 1 and
 * the normalized versions c_n^lambda = C_n^lambda / C_n^lambda(1) used as the
 * expansion basis on the real sphere S^d with lambda = (d-1)/2.
 *
 * Dimension d = 1 has no Gegenbauer order (lambda would be 0); its basis is
 * the Chebyshev family cos(n arccos u) and is routed there explicitly.
 */

#include <cmath>
#include <concepts>
#include <string>
#include <vector>

#include "errors.hpp"

namespace schoenberg {

/// Points within this distance outside [-1, 1] are clamped (quadrature nodes may round outward).
inline constexpr double kBoundaryClamp = 1e-12;

namespace detail {

template <std::floating_point Real>
Real clamp_unit(Real u)
{
    if (u > Real(1)) {
        if (u - Real(1) > Real(kBoundaryClamp)) {
            throw DomainError("argument " + std::to_string(u) + " outside [-1, 1]");
        }
        return Real(1);
    }
    if (u < Real(-1)) {
        if (Real(-1) - u > Real(kBoundaryClamp)) {
            throw DomainError("argument " + std::to_string(u) + " outside [-1, 1]");
        }
        return Real(-1);
    }
    return u;
}

template <std::floating_point Real>
void require_positive_order(Real lambda)
{
    if (!(lambda > Real(0))) {
        throw DomainError("Gegenbauer order must be positive, got " + std::to_string(lambda));
    }
}

} // namespace detail

/// Degree and order of a Gegenbauer polynomial.
struct PolyOrder {
    unsigned n = 0;
    double lambda = 0.5;

    static PolyOrder for_dimension(unsigned n, int d)
    {
        if (d < 2) {
            throw DomainError("Gegenbauer order requires dimension >= 2");
        }
        return {n, 0.5 * (d - 1)};
    }
};

/// C_n^lambda(u) by the forward three-term recurrence
/// n C_n = 2u(n+lambda-1) C_{n-1} - (n+2lambda-2) C_{n-2}.
template <std::floating_point Real>
Real gegenbauer(unsigned n, Real lambda, Real u)
{
    detail::require_positive_order(lambda);
    u = detail::clamp_unit(u);
    if (n == 0) {
        return Real(1);
    }
    Real prev = 1;
    Real curr = 2 * lambda * u;
    for (unsigned k = 2; k <= n; ++k) {
        const Real next = (2 * u * (k + lambda - 1) * curr - (k + 2 * lambda - 2) * prev) / Real(k);
        prev = curr;
        curr = next;
    }
    return curr;
}

/// C_n^lambda(1) = binom(n + 2lambda - 1, n), as a running product of ratios.
template <std::floating_point Real>
Real gegenbauer_at_one(unsigned n, Real lambda)
{
    detail::require_positive_order(lambda);
    Real value = 1;
    for (unsigned k = 1; k <= n; ++k) {
        value *= (k + 2 * lambda - 1) / Real(k);
    }
    return value;
}

/// Values c_0(u), ..., c_N(u) of the normalized basis for dimension d >= 1.
///
/// For d >= 2 the recurrence is run directly on the normalized polynomials,
/// c_k = [2u(k+lambda-1) c_{k-1} - (k-1) c_{k-2}] / (k+2lambda-1),
/// which never forms C_k(1) and so cannot overflow for large degree.
template <std::floating_point Real>
std::vector<Real> normalized_gegenbauer_all(unsigned N, int d, Real u)
{
    if (d < 1) {
        throw DomainError("dimension must be >= 1, got " + std::to_string(d));
    }
    u = detail::clamp_unit(u);
    std::vector<Real> c(N + 1);
    c[0] = 1;
    if (N == 0) {
        return c;
    }
    c[1] = u;
    if (d == 1) {
        for (unsigned k = 2; k <= N; ++k) {
            c[k] = 2 * u * c[k - 1] - c[k - 2];
        }
        return c;
    }
    const Real lambda = Real(0.5) * Real(d - 1);
    for (unsigned k = 2; k <= N; ++k) {
        c[k] = (2 * u * (k + lambda - 1) * c[k - 1] - Real(k - 1) * c[k - 2]) / (k + 2 * lambda - 1);
    }
    return c;
}

/// c_n^{(d-1)/2}(u) for d >= 2; cos(n arccos u) for d = 1.
template <std::floating_point Real>
Real normalized_gegenbauer(unsigned n, int d, Real u)
{
    if (d < 1) {
        throw DomainError("dimension must be >= 1, got " + std::to_string(d));
    }
    u = detail::clamp_unit(u);
    if (d == 1) {
        return std::cos(Real(n) * std::acos(u));
    }
    return normalized_gegenbauer_all<Real>(n, d, u)[n];
}

} // namespace schoenberg
