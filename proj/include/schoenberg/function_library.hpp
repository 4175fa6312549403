#pragma once
/**
 * Built-in test functions with independently known coefficients, plus
 * seeded generators of random nonnegative normalized sequences.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "complex_coeffs.hpp"
#include "errors.hpp"
#include "real_coeffs.hpp"

namespace schoenberg {

/// Seed used by the CLI and the invariant suite when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20190123;

using Rng = std::mt19937_64;

inline IsotropicFunction constant_function()
{
    return {[](double) { return 1.0; }, "constant"};
}

inline IsotropicFunction cosine_function()
{
    return {[](double theta) { return std::cos(theta); }, "cosine"};
}

/// Poisson kernel scaled to psi(0) = 1:
/// psi(theta) = (1-r)/(1+r) * (1-r^2)/(1 - 2r cos theta + r^2),
/// whose circle coefficients are b_{0,1} = (1-r)/(1+r), b_{n,1} = 2 r^n (1-r)/(1+r).
inline IsotropicFunction poisson_kernel(double r)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("Poisson parameter r must lie in (0, 1)");
    }
    return {[r](double theta) {
                return (1.0 - r) / (1.0 + r) * (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
            },
            "poisson(r=" + std::to_string(r) + ")"};
}

/// Random sparse probability vector over indices 0..N. Each index is kept
/// with probability 1/2 (at least one survives); weights are uniform then normalized.
inline std::vector<double> random_probability_vector(Rng& rng, int N)
{
    if (N < 0) {
        throw DomainError("random vector needs N >= 0");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution keep(0.5);
    std::vector<double> v(static_cast<std::size_t>(N) + 1, 0.0);
    double total = 0.0;
    for (double& x : v) {
        if (keep(rng)) {
            x = unit(rng) + 1e-3;
            total += x;
        }
    }
    if (total == 0.0) {
        std::uniform_int_distribution<int> pick(0, N);
        v[static_cast<std::size_t>(pick(rng))] = 1.0;
        total = 1.0;
    }
    for (double& x : v) {
        x /= total;
    }
    return v;
}

inline RealSchoenbergSequence random_real_sequence(Rng& rng, int d, int N)
{
    return RealSchoenbergSequence(d, random_probability_vector(rng, N), true);
}

/// Random sparse nonnegative normalized double sequence with m + n <= M.
inline ComplexSchoenbergSequence random_complex_sequence(Rng& rng, int q, int M)
{
    std::vector<BiDegree> slots;
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; m + n <= M; ++n) {
            slots.emplace_back(m, n);
        }
    }
    const auto weights = random_probability_vector(rng, static_cast<int>(slots.size()) - 1);
    std::map<BiDegree, double> entries;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (weights[i] > 0.0) {
            entries[slots[i]] = weights[i];
        }
    }
    return ComplexSchoenbergSequence(q, M, std::move(entries), true);
}

/// Truncated Gegenbauer mixture: reconstruct of a random sequence at dimension d.
inline IsotropicFunction gegenbauer_mixture(std::uint64_t seed, int N, int d)
{
    Rng rng(seed);
    return as_function(random_real_sequence(rng, d, N),
                       "gegenbauer-mixture(seed=" + std::to_string(seed) + ",N=" + std::to_string(N) +
                           ",d=" + std::to_string(d) + ")");
}

/// phi(z) = z^m conj(z)^n.
inline DiskFunction disk_monomial(int m, int n)
{
    if (m < 0 || n < 0) {
        throw DomainError("disk monomial exponents must be >= 0");
    }
    return {[m, n](const DiskPoint& p) {
                const Complex z = p.z();
                Complex value = 1.0;
                for (int i = 0; i < m; ++i) {
                    value *= z;
                }
                for (int i = 0; i < n; ++i) {
                    value *= std::conj(z);
                }
                return value;
            },
            "disk-monomial(" + std::to_string(m) + "," + std::to_string(n) + ")"};
}

inline DiskFunction disk_mixture(std::uint64_t seed, int M, int q)
{
    Rng rng(seed);
    return as_disk_function(random_complex_sequence(rng, q, M),
                            "disk-mixture(seed=" + std::to_string(seed) + ",M=" + std::to_string(M) +
                                ",q=" + std::to_string(q) + ")");
}

} // namespace schoenberg
