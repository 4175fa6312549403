#pragma once
/**
 * Invariant suite behind the `selftest` command. Every check is seeded, so a
 * run is reproducible for a given seed.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "complex_coeffs.hpp"
#include "dimension_walk_complex.hpp"
#include "dimension_walk_real.hpp"
#include "disk_polys.hpp"
#include "function_library.hpp"
#include "gegenbauer.hpp"
#include "real_coeffs.hpp"
#include "spd.hpp"

namespace schoenberg {

struct CheckResult {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double tolerance = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    int trials = 25;
};

namespace detail {

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double err = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        err = std::max(err, std::abs(a[i] - b[i]));
    }
    return err;
}

inline double max_abs_diff(const ComplexSchoenbergSequence& a, const ComplexSchoenbergSequence& b)
{
    double err = 0.0;
    for (const auto& [key, value] : a.entries) {
        err = std::max(err, std::abs(value - b.at(key.first, key.second)));
    }
    for (const auto& [key, value] : b.entries) {
        err = std::max(err, std::abs(value - a.at(key.first, key.second)));
    }
    return err;
}

inline CheckResult below(std::string name, double observed, double tolerance)
{
    return {std::move(name), observed <= tolerance, observed, tolerance};
}

} // namespace detail

inline std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options = {})
{
    std::vector<CheckResult> results;
    Rng rng(options.seed);
    std::uniform_int_distribution<int> degree(0, 40);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    {
        double worst = 0.0;
        for (int d = 2; d <= 8; ++d) {
            for (int i = 0; i <= 1000; ++i) {
                const double u = -1.0 + 2.0 * i / 1000.0;
                for (double c : normalized_gegenbauer_all<double>(50, d, u)) {
                    worst = std::max(worst, std::abs(c));
                }
            }
        }
        results.push_back(detail::below("normalized Gegenbauer bounded by 1", worst - 1.0, 1e-12));
    }

    {
        double worst = 0.0;
        for (int d = 1; d <= 6; ++d) {
            for (int t = 0; t < options.trials; ++t) {
                const auto seq = random_real_sequence(rng, d, degree(rng));
                const auto back = walk_down(walk_up(seq)).sequence;
                worst = std::max(worst, detail::max_abs_diff(back.coeffs, seq.coeffs));
            }
        }
        results.push_back(detail::below("real walk_down(walk_up(b)) = b", worst, 1e-11));
    }

    {
        double worst = 0.0;
        for (int d = 1; d <= 6; ++d) {
            for (int t = 0; t < options.trials; ++t) {
                const auto seq = random_real_sequence(rng, d + 2, degree(rng));
                worst = std::max(worst, std::abs(walk_up(seq).mass() - seq.mass()));
                worst = std::max(worst, std::abs(walk_down(seq).sequence.mass() - seq.mass()));
            }
        }
        results.push_back(detail::below("real walks conserve mass", worst, 1e-10));
    }

    {
        double worst = 0.0;
        for (int d = 1; d <= 5; ++d) {
            const auto seq = random_real_sequence(rng, d, 20);
            const auto up = walk_up(seq);
            for (int i = 0; i <= 500; ++i) {
                const double theta = std::numbers::pi * i / 500.0;
                worst = std::max(worst, std::abs(reconstruct(up, theta) - reconstruct(seq, theta)));
            }
        }
        results.push_back(detail::below("reconstruct(walk_up(b)) = reconstruct(b)", worst, 1e-9));
    }

    {
        double worst = 0.0;
        for (int d = 3; d <= 6; ++d) {
            const auto seq = random_real_sequence(rng, d, 15);
            const auto rule = theta_rule(default_theta_nodes(15));
            worst = std::max(worst, detail::max_abs_diff(cross_project(seq, d - 2, rule).coeffs,
                                                         walk_down(seq).sequence.coeffs));
            worst = std::max(worst, detail::max_abs_diff(cross_project(seq, 1, rule).coeffs,
                                                         cross_project_via_reconstruct(seq, 1, rule).coeffs));
        }
        results.push_back(detail::below("cross_project agrees with walk_down and recompute", worst, 1e-9));
    }

    {
        double worst = 0.0;
        for (int d = 1; d <= 6; ++d) {
            const auto seq = random_real_sequence(rng, d, 30);
            const auto again = compute_real_coeffs(as_function(seq), d, 30).sequence;
            worst = std::max(worst, detail::max_abs_diff(again.coeffs, seq.coeffs));
        }
        results.push_back(detail::below("compute_real_coeffs(reconstruct(b)) = b", worst, 1e-11));
    }

    {
        double worst = 0.0;
        for (int q = 2; q <= 4; ++q) {
            const auto rule = default_disk_quadrature(q, 8);
            for (int m = 0; m <= 4; ++m) {
                for (int n = 0; n <= 4; ++n) {
                    for (int k = 0; k <= 4; ++k) {
                        for (int l = 0; l <= 4; ++l) {
                            const Complex ip = rule.integrate([&](const DiskPoint& p) {
                                return disk_poly(m, n, q, p) * std::conj(disk_poly(k, l, q, p));
                            });
                            const double expected = (m == k && n == l) ? 1.0 / h_norm(m, n, q) : 0.0;
                            worst = std::max(worst, std::abs(ip - expected));
                        }
                    }
                }
            }
        }
        results.push_back(detail::below("disk polynomial orthogonality", worst, 1e-10));
    }

    {
        double worst = 0.0;
        std::uniform_int_distribution<int> idx(0, 10);
        std::uniform_int_distribution<int> sphere(2, 6);
        for (int t = 0; t < 200; ++t) {
            const int m = 1 + idx(rng) % 10;
            const int n = idx(rng);
            const int q = sphere(rng);
            const auto p = DiskPoint::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
            const double r2 = p.x * p.x + p.y * p.y;
            const Complex lhs = (1.0 - r2) * disk_poly(m - 1, n, q + 1, p);
            const Complex rhs = (q - 1.0) / (m + n + q - 1.0) * (disk_poly(m - 1, n, q, p) - disk_poly(m, n + 1, q, p));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        results.push_back(detail::below("disk polynomial dimension recursion", worst, 1e-12));
    }

    {
        double roundtrip = 0.0;
        double mass = 0.0;
        std::uniform_int_distribution<int> deg(0, 12);
        for (int q = 2; q <= 5; ++q) {
            for (int t = 0; t < options.trials; ++t) {
                const auto seq = random_complex_sequence(rng, q, deg(rng));
                const auto up = walk_up_complex(seq);
                const auto back = walk_down_complex(up).sequence;
                roundtrip = std::max(roundtrip, detail::max_abs_diff(back, seq));
                mass = std::max(mass, std::abs(up.mass() - seq.mass()));
                mass = std::max(mass, std::abs(back.mass() - up.mass()));
            }
        }
        results.push_back(detail::below("complex walk_down(walk_up(a)) = a", roundtrip, 1e-10));
        results.push_back(detail::below("complex walks conserve mass", mass, 1e-10));
    }

    {
        double worst = 0.0;
        for (int q = 2; q <= 3; ++q) {
            const auto seq = random_complex_sequence(rng, q, 6);
            const auto up = walk_up_complex(seq);
            const auto oracle = compute_complex_coeffs(as_disk_function(seq), q + 1, 6).sequence;
            worst = std::max(worst, detail::max_abs_diff(up, oracle));
        }
        results.push_back(detail::below("walk_up_complex agrees with disk quadrature", worst, 1e-9));
    }

    {
        double smallest = std::numeric_limits<double>::infinity();
        for (int d = 1; d <= 10; ++d) {
            for (int n = 0; n <= 60; ++n) {
                for (int j = 0; j <= 60; ++j) {
                    smallest = std::min(smallest, walk_down_weight(j, n, d));
                }
            }
        }
        for (int q = 2; q <= 8; ++q) {
            for (int m = 1; m <= 30; ++m) {
                for (int n = 0; n <= 30; ++n) {
                    for (int j = 0; j <= 30; ++j) {
                        smallest = std::min(smallest, complex_walk_weight(j, m, n, q));
                    }
                }
            }
        }
        results.push_back({"inverse-walk weights positive", smallest > 0.0, smallest, 0.0});
    }

    {
        const auto diagonal = ComplexSchoenbergSequence(2, 4, {{{0, 0}, 0.5}, {{1, 1}, 0.3}, {{2, 2}, 0.2}});
        const auto report = check_progressions(support_pattern(diagonal), 2);
        const bool ok = report.violation && report.violation->first == 2 && report.violation->second == 1 &&
                        report.certified;
        results.push_back({"diagonal support violates modulus 2", ok, ok ? 0.0 : 1.0, 0.0});

        bool transfer_ok = true;
        for (int t = 0; t < options.trials; ++t) {
            const auto seq = random_complex_sequence(rng, 3, 10);
            const auto down = walk_down_complex(seq).sequence;
            for (int m = 0; m <= 10; ++m) {
                for (int n = 0; m + n <= 10; ++n) {
                    bool any = false;
                    for (int j = 0; m + n + 2 * j <= 10; ++j) {
                        any = any || seq.at(m + j, n + j) > 0.0;
                    }
                    transfer_ok = transfer_ok && ((down.at(m, n) > 0.0) == any);
                }
            }
        }
        results.push_back({"support transfer under walk_down_complex", transfer_ok, transfer_ok ? 0.0 : 1.0, 0.0});
    }

    return results;
}

} // namespace schoenberg
