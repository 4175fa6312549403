#pragma once
/**
 * 2q-Schoenberg coefficients on the complex sphere Omega_{2q}:
 *
 *     a^{q-2}_{m,n} = h^{q-2}_{m,n} int phi(z) conj(R^{q-2}_{m,n}(z)) d nu_{q-2}(z),
 *     phi(z) = sum_{m,n} a^{q-2}_{m,n} R^{q-2}_{m,n}(z).
 *
 * Sequences are stored sparsely, keyed by (m, n) with m + n <= max_degree.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "disk_polys.hpp"
#include "errors.hpp"
#include "real_coeffs.hpp"

namespace schoenberg {

/// A candidate member of Upsilon_{2q}: phi on the closed disk with phi(1) = 1.
struct DiskFunction {
    std::function<Complex(const DiskPoint&)> eval;
    std::string label;

    Complex operator()(const DiskPoint& p) const { return eval(p); }

    bool is_normalized(double tol = 1e-10) const { return std::abs(eval(DiskPoint{1.0, 0.0}) - 1.0) <= tol; }
};

using BiDegree = std::pair<int, int>;

struct ComplexSchoenbergSequence {
    int q = 2;
    int max_degree = 0;
    std::map<BiDegree, double> entries;
    bool finite_support = true;
    bool valid_mass = false;

    ComplexSchoenbergSequence() = default;
    ComplexSchoenbergSequence(int q_, int max_degree_, std::map<BiDegree, double> values, bool finite = true)
        : q(q_), max_degree(max_degree_), entries(std::move(values)), finite_support(finite)
    {
        if (q < 2) {
            throw DomainError("complex sphere index q must be >= 2, got " + std::to_string(q));
        }
        if (max_degree < 0) {
            throw DomainError("max_degree must be >= 0");
        }
        for (const auto& [key, value] : entries) {
            if (key.first < 0 || key.second < 0 || key.first + key.second > max_degree) {
                throw InvalidSequence("entry (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                      ") outside bi-degree range m + n <= " + std::to_string(max_degree));
            }
        }
        refresh_validity();
    }

    double at(int m, int n) const
    {
        const auto it = entries.find({m, n});
        return it == entries.end() ? 0.0 : it->second;
    }

    double mass() const
    {
        double sum = 0.0;
        for (const auto& [key, value] : entries) {
            sum += value;
        }
        return sum;
    }

    double min_entry() const
    {
        double m = 0.0;
        for (const auto& [key, value] : entries) {
            m = std::min(m, value);
        }
        return m;
    }

    void refresh_validity()
    {
        valid_mass = min_entry() >= -kNegativeTolerance && mass() <= 1.0 + kMassTolerance;
    }

    /// a_{m,n} = a_{n,m} within tol; holds when phi is real on [-1, 1].
    bool is_symmetric(double tol = 1e-10) const
    {
        for (const auto& [key, value] : entries) {
            if (std::abs(value - at(key.second, key.first)) > tol) {
                return false;
            }
        }
        return true;
    }
};

struct ComplexCoefficients {
    ComplexSchoenbergSequence sequence;
    /// Largest |Im a_{m,n}|; members of Upsilon_{2q} have real coefficients.
    double max_imaginary = 0.0;
    double absolute_mass = 0.0;
    bool ill_conditioned = false;
};

/// a^{q-2}_{m,n} for all m + n <= M by disk quadrature.
inline ComplexCoefficients compute_complex_coeffs(const DiskFunction& phi, int q, int M, const DiskQuadratureRule& rule)
{
    if (q < 2) {
        throw DomainError("complex sphere index q must be >= 2");
    }
    if (M < 0) {
        throw DomainError("max_degree must be >= 0");
    }
    if (rule.q != q) {
        throw DomainError("disk quadrature built for q = " + std::to_string(rule.q) + ", need q = " + std::to_string(q));
    }

    std::map<BiDegree, Complex> sums;
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; m + n <= M; ++n) {
            sums[{m, n}] = 0.0;
        }
    }
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const DiskPoint& p = rule.points[i];
        const Complex weighted = rule.weights[i] * phi(p);
        for (auto& [key, sum] : sums) {
            sum += weighted * std::conj(disk_poly(key.first, key.second, q, p));
        }
    }

    ComplexCoefficients out;
    std::map<BiDegree, double> values;
    for (const auto& [key, sum] : sums) {
        const Complex a = h_norm(key.first, key.second, q) * sum;
        values[key] = a.real();
        out.max_imaginary = std::max(out.max_imaginary, std::abs(a.imag()));
        out.absolute_mass += std::abs(a.real());
    }
    out.sequence = ComplexSchoenbergSequence(q, M, std::move(values), false);
    out.ill_conditioned = out.absolute_mass > 1.0 + kIllConditionedExcess;
    return out;
}

inline ComplexCoefficients compute_complex_coeffs(const DiskFunction& phi, int q, int M)
{
    return compute_complex_coeffs(phi, q, M, default_disk_quadrature(q, M));
}

/// sum a^{q-2}_{m,n} R^{q-2}_{m,n}(z).
inline Complex reconstruct_complex(const ComplexSchoenbergSequence& seq, const DiskPoint& p)
{
    Complex sum = 0.0;
    for (const auto& [key, value] : seq.entries) {
        if (value != 0.0) {
            sum += value * disk_poly(key.first, key.second, seq.q, p);
        }
    }
    return sum;
}

inline DiskFunction as_disk_function(ComplexSchoenbergSequence seq, std::string label = "reconstructed")
{
    return {[s = std::move(seq)](const DiskPoint& p) { return reconstruct_complex(s, p); }, std::move(label)};
}

} // namespace schoenberg
