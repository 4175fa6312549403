#pragma once
/**
 * Transport of 2q-Schoenberg sequences between Omega_{2q} and Omega_{2(q+1)}.
 *
 * Both directions act along the diagonals m - n = const only.
 */

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "complex_coeffs.hpp"
#include "dimension_walk_real.hpp"
#include "errors.hpp"

namespace schoenberg {

/// Weight v^{q-2}_{j,m,n} of the inverse complex walk, m >= 1:
///
///   v_{j,m,n} = (q-1)(m+n+q-2) m^{(j)} (n+1)^{(j)} / [(m+q-2)^{(j+1)} (n+q-1)^{(j+1)}].
///
/// This is the telescoped product (prod_{i<j} w_{m+i,n+i}) u_{m+j,n+j} with
/// u_{m,n} = (q-1)(m+n+q-2)/((m+q-2)(n+q-1)) and
/// w_{m,n} = (m+n+q-2) m (n+1) / ((m+q-2)(n+q-1)(m+n+q)).
/// All weights lie in (0, 1].
inline double complex_walk_weight(int j, int m, int n, int q)
{
    if (j < 0 || m < 1 || n < 0 || q < 2) {
        throw DomainError("complex_walk_weight needs j >= 0, m >= 1, n >= 0, q >= 2");
    }
    const double lead = (q - 1.0) * (m + n + q - 2.0);
    const double a = m + q - 2.0;
    const double b = n + q - 1.0;
    if (j <= kDirectProductLimit) {
        double ratio = 1.0;
        for (int i = 0; i < j; ++i) {
            ratio *= (m + i) * (n + 1.0 + i) / ((a + i) * (b + i));
        }
        return lead * ratio / ((a + j) * (b + j));
    }
    const double log_ratio = log_rising_factorial(m, j) + log_rising_factorial(n + 1.0, j) -
                             log_rising_factorial(a, j + 1) - log_rising_factorial(b, j + 1);
    return lead * std::exp(log_ratio);
}

struct ComplexWalkWeights {
    int q = 2;

    double operator()(int j, int m, int n) const { return complex_walk_weight(j, m, n, q); }
};

/// Coefficients at q+1 from coefficients at q, along each diagonal:
///
///   a^{q-1}_{m,n} = (m+q-1)(n+q-1) / ((q-1)(m+n+q-1)) a^{q-2}_{m,n}
///                 - (m+1)(n+1) / ((q-1)(m+n+q+1)) a^{q-2}_{m+1,n+1}.
///
/// Finitely supported input keeps max_degree M; a truncated infinite input
/// drops to M - 2.
inline ComplexSchoenbergSequence walk_up_complex(const ComplexSchoenbergSequence& seq)
{
    const int M = seq.max_degree;
    if (!seq.finite_support && M < 2) {
        throw InvalidSequence("walk_up_complex of a truncated infinite sequence needs max_degree >= 2");
    }
    const int q = seq.q;
    const int out_degree = seq.finite_support ? M : M - 2;

    std::set<BiDegree> keys;
    for (const auto& [key, value] : seq.entries) {
        const auto [m, n] = key;
        if (m + n <= out_degree) {
            keys.insert(key);
        }
        if (m >= 1 && n >= 1 && m + n - 2 <= out_degree) {
            keys.insert({m - 1, n - 1});
        }
    }

    std::map<BiDegree, double> out;
    for (const auto& [m, n] : keys) {
        out[{m, n}] = (m + q - 1.0) * (n + q - 1.0) / ((q - 1.0) * (m + n + q - 1.0)) * seq.at(m, n) -
                      (m + 1.0) * (n + 1.0) / ((q - 1.0) * (m + n + q + 1.0)) * seq.at(m + 1, n + 1);
    }
    return ComplexSchoenbergSequence(q + 1, out_degree, std::move(out), seq.finite_support);
}

struct ComplexWalkDownResult {
    ComplexSchoenbergSequence sequence;
    double unresolved_mass = 0.0;
};

/// Coefficients at q = seq.q - 1 from coefficients at seq.q >= 3:
///
///   a^{q-2}_{m,n} = sum_j v^{q-2}_{j,m+1,n} a^{q-1}_{m+j,n+j}.
///
/// Truncation and tail handling follow walk_down.
inline ComplexWalkDownResult walk_down_complex(const ComplexSchoenbergSequence& seq, double tail_tol = 1e-12)
{
    if (seq.q < 3) {
        throw DomainError("walk_down_complex needs input q >= 3, got " + std::to_string(seq.q));
    }
    if (!seq.finite_support && seq.min_entry() < -kNegativeTolerance) {
        throw InvalidSequence(
            "walk_down_complex: truncated infinite input has negative entries, series hypotheses unverifiable");
    }
    const int q = seq.q - 1;
    const int M = seq.max_degree;
    const double missing_tail = seq.finite_support ? 0.0 : std::max(0.0, 1.0 - seq.mass());

    std::set<BiDegree> keys;
    for (const auto& [key, value] : seq.entries) {
        const auto [m, n] = key;
        for (int j = 0; j <= std::min(m, n); ++j) {
            keys.insert({m - j, n - j});
        }
    }

    std::map<BiDegree, double> out;
    double unresolved = 0.0;
    for (const auto& [m, n] : keys) {
        double sum = 0.0;
        int small_run = 0;
        int j = 0;
        for (; m + n + 2 * j <= M; ++j) {
            const double term = complex_walk_weight(j, m + 1, n, q) * seq.at(m + j, n + j);
            sum += term;
            if (!seq.finite_support) {
                small_run = (std::abs(term) < tail_tol * std::abs(sum)) ? small_run + 1 : 0;
                if (small_run >= 3) {
                    ++j;
                    break;
                }
            }
        }
        out[{m, n}] = sum;
        if (!seq.finite_support) {
            double skipped = 0.0;
            for (; m + n + 2 * j <= M; ++j) {
                skipped += seq.at(m + j, n + j);
            }
            unresolved = std::max(unresolved, skipped + missing_tail);
        }
    }
    return {ComplexSchoenbergSequence(q, M, std::move(out), seq.finite_support), unresolved};
}

} // namespace schoenberg
