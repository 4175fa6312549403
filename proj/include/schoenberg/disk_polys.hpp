#pragma once
/**
 * Disk polynomials R^alpha_{m,n} on the closed unit disk, alpha = q - 2 for the
 * complex sphere Omega_{2q}.
 *
 *     R^alpha_{m,n}(r e^{i phi}) = r^{|m-n|} e^{i(m-n)phi} P_k^{(alpha,|m-n|)}(2r^2 - 1) / P_k^{(alpha,|m-n|)}(1),
 *     k = min(m, n),
 *
 * with P^{(a,b)}_k the Jacobi polynomial. R(1) = 1, and the family is
 * orthogonal for
 *
 *     d nu_alpha(z) = (alpha+1)/pi (1 - |z|^2)^alpha dx dy,
 *     int R_{m,n} conj(R_{k,l}) d nu = delta_{mk} delta_{nl} / h_{m,n}.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"

namespace schoenberg {

using Complex = std::complex<double>;

struct DiskIndex {
    int m = 0;
    int n = 0;
    int alpha = 0;

    static DiskIndex for_sphere(int m, int n, int q)
    {
        if (q < 2) {
            throw DomainError("complex sphere index q must be >= 2");
        }
        return {m, n, q - 2};
    }
};

struct DiskPoint {
    double x = 0.0;
    double y = 0.0;

    static DiskPoint polar(double r, double phi) { return {r * std::cos(phi), r * std::sin(phi)}; }

    Complex z() const noexcept { return {x, y}; }
    double radius() const noexcept { return std::hypot(x, y); }
    double angle() const noexcept { return std::atan2(y, x); }
};

/// Points with x^2 + y^2 up to 1 + 1e-12 count as inside the closed disk.
inline constexpr double kDiskTolerance = 1e-12;

namespace detail {

/// P_k^{(a,b)}(x) / P_k^{(a,b)}(1) by the standard three-term recurrence.
inline double normalized_jacobi(int k, double a, double b, double x)
{
    if (k == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (int j = 2; j <= k; ++j) {
        const double s = 2.0 * j + a + b;
        const double next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * curr -
                             2.0 * (j + a - 1.0) * (j + b - 1.0) * s * prev) /
                            (2.0 * j * (j + a + b) * (s - 2.0));
        prev = curr;
        curr = next;
    }
    // P_k^{(a,b)}(1) = binom(k + a, k)
    double at_one = 1.0;
    for (int j = 1; j <= k; ++j) {
        at_one *= (j + a) / double(j);
    }
    return curr / at_one;
}

} // namespace detail

/// R^alpha_{m,n}(z), evaluated in polar form.
inline Complex disk_poly(const DiskIndex& idx, const DiskPoint& p)
{
    if (idx.m < 0 || idx.n < 0 || idx.alpha < 0) {
        throw DomainError("disk polynomial needs m, n, alpha >= 0");
    }
    const double r2 = p.x * p.x + p.y * p.y;
    if (r2 > 1.0 + kDiskTolerance) {
        throw DomainError("point outside the closed unit disk");
    }
    const int shift = idx.m - idx.n;
    const int b = shift < 0 ? -shift : shift;
    const int k = idx.m < idx.n ? idx.m : idx.n;
    const double radial = detail::normalized_jacobi(k, idx.alpha, b, 2.0 * std::min(r2, 1.0) - 1.0);
    if (shift == 0) {
        return {radial, 0.0};
    }
    const double r = std::sqrt(r2);
    return std::polar(std::pow(r, b) * radial, shift * p.angle());
}

inline Complex disk_poly(int m, int n, int q, const DiskPoint& p)
{
    return disk_poly(DiskIndex::for_sphere(m, n, q), p);
}

/// h^{q-2}_{m,n} = (m+n+q-1)/(q-1) * binom(m+q-2, q-2) * binom(n+q-2, q-2).
inline double h_norm(int m, int n, int q)
{
    if (q < 2 || m < 0 || n < 0) {
        throw DomainError("h_norm needs q >= 2 and m, n >= 0");
    }
    auto binom = [](int top, int k) {
        double v = 1.0;
        for (int i = 1; i <= k; ++i) {
            v *= double(top - k + i) / double(i);
        }
        return v;
    };
    return (m + n + q - 1.0) / (q - 1.0) * binom(m + q - 2, q - 2) * binom(n + q - 2, q - 2);
}

/// Product rule for d nu_{q-2}: Gauss-Legendre in s = r^2 on [0, 1] against
/// (q-1)(1-s)^{q-2} ds, times a uniform rule in phi over [0, 2pi).
/// Total weight is 1.
struct DiskQuadratureRule {
    QuadratureKind kind = QuadratureKind::DiskProduct;
    int q = 2;
    std::vector<DiskPoint> points;
    std::vector<double> weights;

    std::size_t size() const noexcept { return points.size(); }

    template <typename F>
    auto integrate(F&& f) const
    {
        decltype(f(DiskPoint{})) sum{};
        for (std::size_t i = 0; i < points.size(); ++i) {
            sum += weights[i] * f(points[i]);
        }
        return sum;
    }
};

inline DiskQuadratureRule disk_quadrature(int q, std::size_t radial_nodes, std::size_t angular_nodes)
{
    if (q < 2) {
        throw DomainError("disk quadrature needs q >= 2");
    }
    if (radial_nodes == 0 || angular_nodes == 0) {
        throw DomainError("disk quadrature needs at least one node per direction");
    }
    const auto radial = gauss_legendre(radial_nodes, 0.0, 1.0);
    DiskQuadratureRule rule;
    rule.q = q;
    rule.points.reserve(radial_nodes * angular_nodes);
    rule.weights.reserve(radial_nodes * angular_nodes);
    const double dphi = 2.0 * std::numbers::pi / double(angular_nodes);
    for (std::size_t i = 0; i < radial_nodes; ++i) {
        const double s = radial.nodes[i];
        const double w = radial.weights[i] * (q - 1) * std::pow(1.0 - s, q - 2) / double(angular_nodes);
        const double r = std::sqrt(s);
        for (std::size_t a = 0; a < angular_nodes; ++a) {
            rule.points.push_back(DiskPoint::polar(r, dphi * double(a)));
            rule.weights.push_back(w);
        }
    }
    return rule;
}

/// Angular node count exact for trigonometric degree up to the given bi-degree sum.
inline std::size_t default_angular_nodes(int max_degree) { return 4 * static_cast<std::size_t>(max_degree) + 8; }

/// Radial node count exact for polynomial integrands of total bi-degree up to 2*max_degree.
inline std::size_t default_radial_nodes(int max_degree, int q)
{
    return std::max<std::size_t>(32, 2 * static_cast<std::size_t>(max_degree) + static_cast<std::size_t>(q) + 16);
}

inline DiskQuadratureRule default_disk_quadrature(int q, int max_degree)
{
    return disk_quadrature(q, default_radial_nodes(max_degree, q), default_angular_nodes(max_degree));
}

} // namespace schoenberg
