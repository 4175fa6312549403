#pragma once
/**
 * Transport of d-Schoenberg sequences between sphere dimensions.
 *
 *   walk_up        d -> d+2, the classical two-term recursion.
 *   walk_down      d+2 -> d, the inverse series b_{n,d} = sum_j w_{j,n,d} b_{n+2j,d+2}
 *                  (and its d = 1 variant from S^3).
 *   cross_project  d -> d' < d for any d', by numerical integration of the
 *                  expansion against the target basis.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gegenbauer.hpp"
#include "quadrature.hpp"
#include "real_coeffs.hpp"

namespace schoenberg {

/// Rising factorials up to this length are formed as direct products; longer ones in log space.
inline constexpr int kDirectProductLimit = 30;

/// log of (x)^{(j)} = x (x+1) ... (x+j-1), x > 0.
inline double log_rising_factorial(double x, int j)
{
    if (!(x > 0.0) || j < 0) {
        throw DomainError("log rising factorial needs x > 0 and j >= 0");
    }
    return std::lgamma(x + j) - std::lgamma(x);
}

/// (x)^{(j)}. Zero when x = 0 and j >= 1.
inline double rising_factorial(double x, int j)
{
    if (j < 0) {
        throw DomainError("rising factorial needs j >= 0");
    }
    if (j <= kDirectProductLimit || x == 0.0) {
        double p = 1.0;
        for (int i = 0; i < j; ++i) {
            p *= x + i;
        }
        return p;
    }
    return std::exp(log_rising_factorial(x, j));
}

/// Weight w_{j,n,d} of the inverse walk from dimension d+2 to d.
///
/// For d >= 2:
///   w_{0,n,d} = d(2n+d-1) / ((n+d-1)(n+d)),
///   w_{j,n,d} = d(2n+d-1)/4 * (n/2+1/2)^{(j)} (n/2+1)^{(j)} / [(n/2+(d-1)/2)^{(j+1)} (n/2+d/2)^{(j+1)}].
/// The j >= 1 expression reduces to w_0 at j = 0, and equals the telescoped
/// product form (prod_l v_{n+2l,d}) * d(2n+d-1) / ((n+2j+d-1)(n+2j+d)).
/// For d = 1 (from S^3): w_{j,0,1} = 1/(2j+1), w_{j,n,1} = 2/(n+2j+1) for n >= 1.
inline double walk_down_weight(int j, int n, int d)
{
    if (j < 0 || n < 0 || d < 1) {
        throw DomainError("walk_down_weight needs j, n >= 0 and d >= 1");
    }
    if (d == 1) {
        return n == 0 ? 1.0 / (2.0 * j + 1.0) : 2.0 / (n + 2.0 * j + 1.0);
    }
    const double scale = double(d) * (2.0 * n + d - 1);
    if (j == 0) {
        return scale / ((n + d - 1.0) * (n + d));
    }
    const double a = 0.5 * n + 0.5;
    const double b = 0.5 * n + 1.0;
    const double c = 0.5 * n + 0.5 * (d - 1);
    const double e = 0.5 * n + 0.5 * d;
    if (j <= kDirectProductLimit) {
        double ratio = 1.0;
        for (int i = 0; i < j; ++i) {
            ratio *= (a + i) * (b + i) / ((c + i) * (e + i));
        }
        ratio /= (c + j) * (e + j);
        return 0.25 * scale * ratio;
    }
    const double log_ratio = log_rising_factorial(a, j) + log_rising_factorial(b, j) -
                             log_rising_factorial(c, j + 1) - log_rising_factorial(e, j + 1);
    return 0.25 * scale * std::exp(log_ratio);
}

/// Inverse-walk weights for a fixed target dimension d.
struct WalkWeights {
    int d = 2;

    double operator()(int j, int n) const { return walk_down_weight(j, n, d); }
};

/// Coefficients at d+2 from coefficients at d.
///
/// d = 1:  b_{0,3} = b_{0,1} - b_{2,1}/2,  b_{n,3} = (n+1)/2 (b_{n,1} - b_{n+2,1}).
/// d >= 2: b_{n,d+2} = (n+d-1)(n+d)/(d(2n+d-1)) b_{n,d} - (n+1)(n+2)/(d(2n+d+3)) b_{n+2,d}.
///
/// A finitely supported input keeps its truncation N. A truncated infinite
/// input loses the last two entries (they need b_{N+1}, b_{N+2}).
inline RealSchoenbergSequence walk_up(const RealSchoenbergSequence& seq)
{
    const int N = seq.truncation();
    if (!seq.finite_support && N < 2) {
        throw InvalidSequence("walk_up of a truncated infinite sequence needs truncation >= 2");
    }
    const int d = seq.d;
    const int out_n = seq.finite_support ? N : N - 2;
    std::vector<double> out(static_cast<std::size_t>(out_n) + 1);
    for (int n = 0; n <= out_n; ++n) {
        double value = 0.0;
        if (d == 1) {
            value = (n == 0) ? seq.at(0) - 0.5 * seq.at(2) : 0.5 * (n + 1) * (seq.at(n) - seq.at(n + 2));
        } else {
            value = (n + d - 1.0) * (n + d) / (d * (2.0 * n + d - 1)) * seq.at(n) -
                    (n + 1.0) * (n + 2) / (d * (2.0 * n + d + 3)) * seq.at(n + 2);
        }
        out[static_cast<std::size_t>(n)] = value;
    }
    return RealSchoenbergSequence(d + 2, std::move(out), seq.finite_support);
}

struct WalkDownResult {
    RealSchoenbergSequence sequence;
    /// Heuristic bound on coefficient mass the truncated series could not see.
    /// Zero for finitely supported input.
    double unresolved_mass = 0.0;
};

/// Coefficients at d = seq.d - 2 from coefficients at seq.d >= 3.
///
/// Finitely supported input: exact finite sum over the support (entries may be
/// negative). Truncated infinite input: entries must be nonnegative; each
/// series stops once 3 consecutive terms fall below tail_tol times the partial
/// sum, and the skipped input mass plus the missing tail 1 - sum(b) bound the
/// residual (all weights are <= 1).
/// `n_out` < 0 means the input truncation.
inline WalkDownResult walk_down(const RealSchoenbergSequence& seq, int n_out = -1, double tail_tol = 1e-12)
{
    if (seq.d < 3) {
        throw DomainError("walk_down needs input dimension >= 3, got " + std::to_string(seq.d));
    }
    const int N = seq.truncation();
    if (!seq.finite_support) {
        if (seq.min_coeff() < -kNegativeTolerance) {
            throw InvalidSequence("walk_down: truncated infinite input has negative entries, series hypotheses unverifiable");
        }
        if (n_out > N) {
            throw InvalidSequence("walk_down: n_out beyond the known truncation of an infinite sequence");
        }
    }
    if (n_out < 0) {
        n_out = N;
    }
    const int d = seq.d - 2;

    // suffix[k] = sum_{i >= k, i = k mod 2} b_i, for the residual bound.
    std::vector<double> suffix(static_cast<std::size_t>(N) + 3, 0.0);
    for (int k = N; k >= 0; --k) {
        suffix[static_cast<std::size_t>(k)] = seq.at(k) + suffix[static_cast<std::size_t>(k) + 2];
    }
    const double missing_tail = seq.finite_support ? 0.0 : std::max(0.0, 1.0 - seq.mass());

    std::vector<double> out(static_cast<std::size_t>(n_out) + 1, 0.0);
    double unresolved = 0.0;
    for (int n = 0; n <= n_out; ++n) {
        double sum = 0.0;
        int small_run = 0;
        int j = 0;
        for (; n + 2 * j <= N; ++j) {
            const double term = walk_down_weight(j, n, d) * seq.at(n + 2 * j);
            sum += term;
            if (!seq.finite_support) {
                small_run = (std::abs(term) < tail_tol * std::abs(sum)) ? small_run + 1 : 0;
                if (small_run >= 3) {
                    ++j;
                    break;
                }
            }
        }
        out[static_cast<std::size_t>(n)] = sum;
        if (!seq.finite_support) {
            const int next = n + 2 * j;
            const double skipped = next <= N ? suffix[static_cast<std::size_t>(next)] : 0.0;
            unresolved = std::max(unresolved, skipped + missing_tail);
        }
    }
    return {RealSchoenbergSequence(d, std::move(out), seq.finite_support), unresolved};
}

/// Matrix P with b_{k,d'} = sum_n P[k][n] b_{n,d}, k, n <= N, by quadrature in theta:
///   d' >= 2: P[k][n] = kappa(k,d') int c_n^{(d-1)/2}(cos t) C_k^{(d'-1)/2}(cos t) sin^{d'-1} t dt
///   d' = 1:  P[k][n] = (1 or 2)/pi int c_n^{(d-1)/2}(cos t) cos(k t) dt
inline std::vector<std::vector<double>> projection_matrix(int d, int d_prime, int N, const QuadratureRule& rule)
{
    if (!(d > d_prime && d_prime >= 1)) {
        throw DomainError("projection needs d > d' >= 1");
    }
    const auto count = static_cast<std::size_t>(N) + 1;
    std::vector<std::vector<double>> P(count, std::vector<double>(count, 0.0));
    const double lambda_target = 0.5 * (d_prime - 1);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double theta = rule.nodes[i];
        const double u = std::cos(theta);
        const auto source = normalized_gegenbauer_all<double>(static_cast<unsigned>(N), d, u);
        std::vector<double> target(count);
        if (d_prime == 1) {
            for (std::size_t k = 0; k < count; ++k) {
                target[k] = std::cos(double(k) * theta);
            }
        } else {
            const auto c = normalized_gegenbauer_all<double>(static_cast<unsigned>(N), d_prime, u);
            const double s = std::pow(std::sin(theta), d_prime - 1);
            double at_one = 1.0;
            for (std::size_t k = 0; k < count; ++k) {
                if (k > 0) {
                    at_one *= (double(k) + 2.0 * lambda_target - 1.0) / double(k);
                }
                target[k] = c[k] * at_one * s;
            }
        }
        for (std::size_t k = 0; k < count; ++k) {
            const double wk = rule.weights[i] * target[k];
            for (std::size_t n = 0; n < count; ++n) {
                P[k][n] += wk * source[n];
            }
        }
    }
    for (std::size_t k = 0; k < count; ++k) {
        const double factor = d_prime == 1 ? (k == 0 ? 1.0 : 2.0) / std::numbers::pi : kappa(static_cast<int>(k), d_prime);
        for (double& v : P[k]) {
            v *= factor;
        }
    }
    return P;
}

/// d'-coefficients of a finitely supported d-sequence via the projection integrals.
inline RealSchoenbergSequence cross_project(const RealSchoenbergSequence& seq, int d_prime, const QuadratureRule& rule)
{
    if (!seq.finite_support) {
        throw InvalidSequence("cross_project needs a finitely supported sequence");
    }
    const int N = seq.truncation();
    const auto P = projection_matrix(seq.d, d_prime, N, rule);
    std::vector<double> out(P.size(), 0.0);
    for (std::size_t k = 0; k < P.size(); ++k) {
        for (std::size_t n = 0; n < P.size(); ++n) {
            out[k] += P[k][n] * seq.coeffs[n];
        }
    }
    return RealSchoenbergSequence(d_prime, std::move(out), true);
}

inline RealSchoenbergSequence cross_project(const RealSchoenbergSequence& seq, int d_prime)
{
    return cross_project(seq, d_prime, theta_rule(default_theta_nodes(static_cast<std::size_t>(seq.truncation()))));
}

/// The same map realized as compute_real_coeffs(reconstruct(seq), d').
inline RealSchoenbergSequence cross_project_via_reconstruct(const RealSchoenbergSequence& seq, int d_prime,
                                                            const QuadratureRule& rule)
{
    if (!seq.finite_support) {
        throw InvalidSequence("cross_project needs a finitely supported sequence");
    }
    if (!(seq.d > d_prime && d_prime >= 1)) {
        throw DomainError("projection needs d > d' >= 1");
    }
    auto result = compute_real_coeffs(as_function(seq), d_prime, seq.truncation(), rule).sequence;
    result.finite_support = true;
    return result;
}

inline RealSchoenbergSequence cross_project_via_reconstruct(const RealSchoenbergSequence& seq, int d_prime)
{
    return cross_project_via_reconstruct(seq, d_prime,
                                         theta_rule(default_theta_nodes(static_cast<std::size_t>(seq.truncation()))));
}

} // namespace schoenberg
