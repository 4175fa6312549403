// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schoenberg/schoenberg.hpp"

using namespace schoenberg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double max_diff(const RealSchoenbergSequence& a, const RealSchoenbergSequence& b)
{
    double err = 0.0;
    for (int n = 0; n <= std::max(a.truncation(), b.truncation()); ++n) {
        err = std::max(err, std::abs(a.at(n) - b.at(n)));
    }
    return err;
}

double max_diff(const ComplexSchoenbergSequence& a, const ComplexSchoenbergSequence& b)
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

// Worst mass drift seen by criteria 1 and 7, reported by criterion 9.
double real_mass_drift = 0.0;
double complex_mass_drift = 0.0;

Outcome real_roundtrip()
{
    const auto start = Clock::now();
    Rng rng(kDefaultSeed);
    std::uniform_int_distribution<int> degree(0, 40);
    double worst = 0.0;
    for (int d = 2; d <= 6; ++d) {
        for (int t = 0; t < 200; ++t) {
            const auto seq = random_real_sequence(rng, d, degree(rng));
            const auto up = walk_up(seq);
            const auto back = walk_down(up).sequence;
            worst = std::max(worst, max_diff(back, seq));
            real_mass_drift = std::max(real_mass_drift, std::abs(up.mass() - seq.mass()));
            real_mass_drift = std::max(real_mass_drift, std::abs(back.mass() - up.mass()));
        }
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-11 && elapsed < 5.0, fmt("max error %.3g (tol 1e-11), %.3f s (limit 5 s)", worst, elapsed)};
}

Outcome poisson_series()
{
    const auto b1 = oracle::poisson_circle_coeffs(0.5, 62);
    const auto b3 = walk_up(RealSchoenbergSequence(1, b1, false));
    const auto down = walk_down(b3, 20).sequence;
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
        worst = std::max(worst, std::abs(down.at(n) - b1[static_cast<std::size_t>(n)]));
    }
    return {b3.truncation() == 60 && worst <= 1e-8, fmt("max error %.3g (tol 1e-8), series truncated at N = %g", worst, b3.truncation())};
}

Outcome quadrature_vs_recursion()
{
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        const auto b2 = random_real_sequence(rng, 2, 15);
        const auto via_walk = walk_up(b2);
        const auto via_quadrature = compute_real_coeffs(as_function(b2), 4, 15).sequence;
        worst = std::max(worst, max_diff(via_walk, via_quadrature));
    }
    return {worst <= 1e-9, fmt("max error %.3g (tol 1e-9) over 20 mixtures", worst)};
}

Outcome cross_projection()
{
    Rng rng(kDefaultSeed + 4);
    double worst = 0.0;
    for (auto [d, dp] : {std::pair{5, 2}, {4, 1}, {6, 3}}) {
        for (int t = 0; t < 20; ++t) {
            const auto seq = random_real_sequence(rng, d, 20);
            worst = std::max(worst, max_diff(cross_project(seq, dp), cross_project_via_reconstruct(seq, dp)));
        }
    }
    return {worst <= 1e-9, fmt("max error %.3g (tol 1e-9)", worst)};
}

Outcome disk_orthogonality()
{
    const auto start = Clock::now();
    constexpr int L = 6;
    double worst = 0.0;
    for (int q = 2; q <= 5; ++q) {
        const auto rule = default_disk_quadrature(q, 2 * L);
        // values[i][m][n] = R_{m,n}(z_i)
        std::vector<Complex> values(rule.size() * (L + 1) * (L + 1));
        auto at = [&](std::size_t i, int m, int n) -> Complex& {
            return values[(i * (L + 1) + static_cast<std::size_t>(m)) * (L + 1) + static_cast<std::size_t>(n)];
        };
        for (std::size_t i = 0; i < rule.size(); ++i) {
            for (int m = 0; m <= L; ++m) {
                for (int n = 0; n <= L; ++n) {
                    at(i, m, n) = disk_poly(m, n, q, rule.points[i]);
                }
            }
        }
        for (int m = 0; m <= L; ++m) {
            for (int n = 0; n <= L; ++n) {
                for (int k = 0; k <= L; ++k) {
                    for (int l = 0; l <= L; ++l) {
                        Complex ip = 0.0;
                        for (std::size_t i = 0; i < rule.size(); ++i) {
                            ip += rule.weights[i] * at(i, m, n) * std::conj(at(i, k, l));
                        }
                        const double expected = (m == k && n == l) ? 1.0 / h_norm(m, n, q) : 0.0;
                        worst = std::max(worst, std::abs(ip - expected));
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-10 && elapsed < 10.0, fmt("max error %.3g (tol 1e-10), %.3f s (limit 10 s)", worst, elapsed)};
}

Outcome disk_recursion()
{
    Rng rng(kDefaultSeed + 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> deg(0, 10);
    std::uniform_int_distribution<int> sphere(2, 6);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const int m = std::max(1, deg(rng));
        const int n = deg(rng);
        const int q = sphere(rng);
        const auto p = DiskPoint::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
        const double r2 = p.x * p.x + p.y * p.y;
        // (1 - |z|^2) R^{q-1}_{m-1,n} = (q-1)/(m+n+q-1) (R^{q-2}_{m-1,n} - R^{q-2}_{m,n+1})
        const Complex lhs = (1.0 - r2) * disk_poly(m - 1, n, q + 1, p);
        const Complex rhs = (q - 1.0) / (m + n + q - 1.0) * (disk_poly(m - 1, n, q, p) - disk_poly(m, n + 1, q, p));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {worst <= 1e-12, fmt("max residual %.3g (tol 1e-12) at 1000 points", worst)};
}

Outcome complex_roundtrip()
{
    Rng rng(kDefaultSeed + 7);
    std::uniform_int_distribution<int> degree(0, 12);
    double worst = 0.0;
    for (int q = 2; q <= 5; ++q) {
        for (int t = 0; t < 200; ++t) {
            const auto seq = random_complex_sequence(rng, q, degree(rng));
            const auto up = walk_up_complex(seq);
            const auto back = walk_down_complex(up).sequence;
            worst = std::max(worst, max_diff(back, seq));
            complex_mass_drift = std::max(complex_mass_drift, std::abs(up.mass() - seq.mass()));
            complex_mass_drift = std::max(complex_mass_drift, std::abs(back.mass() - up.mass()));
        }
    }
    return {worst <= 1e-10, fmt("max error %.3g (tol 1e-10)", worst)};
}

Outcome complex_quadrature()
{
    Rng rng(kDefaultSeed + 8);
    double worst = 0.0;
    for (int q = 2; q <= 3; ++q) {
        for (int M = 0; M <= 8; ++M) {
            for (int t = 0; t < 3; ++t) {
                const auto seq = random_complex_sequence(rng, q, M);
                const auto up = walk_up_complex(seq);
                const auto oracle_coeffs = compute_complex_coeffs(as_disk_function(seq), q + 1, M).sequence;
                worst = std::max(worst, max_diff(up, oracle_coeffs));
            }
        }
    }
    return {worst <= 1e-9, fmt("max error %.3g (tol 1e-9)", worst)};
}

Outcome mass_conservation()
{
    const double worst = std::max(real_mass_drift, complex_mass_drift);
    return {worst <= 1e-10, fmt("real drift %.3g, complex drift %.3g (tol 1e-10)", real_mass_drift, complex_mass_drift)};
}

Outcome spd_diagnostics()
{
    bool ok = true;
    const ComplexSchoenbergSequence diagonal(2, 4, {{{0, 0}, 0.5}, {{1, 1}, 0.3}, {{2, 2}, 0.2}});
    const auto report = check_progressions(support_pattern(diagonal), 4);
    ok = ok && report.violation && *report.violation == std::pair{2, 1} && report.certified;
    if (!ok) {
        return {false, "diagonal support not certified at (2, 1)"};
    }

    for (int M = 1; M <= 12 && ok; ++M) {
        std::map<BiDegree, double> entries;
        for (int m = 0; m <= M; ++m) {
            for (int n = 0; m + n <= M; ++n) {
                entries[{m, n}] = 1.0;
            }
        }
        const double share = 1.0 / static_cast<double>(entries.size());
        for (auto& [key, value] : entries) {
            value = share;
        }
        ok = ok && !check_progressions(support_pattern(ComplexSchoenbergSequence(3, M, entries)), M).violation;
    }
    if (!ok) {
        return {false, "full support missed a progression"};
    }

    Rng rng(kDefaultSeed + 10);
    int mismatches = 0;
    for (int t = 0; t < 100; ++t) {
        const int M = 10;
        const auto seq = random_complex_sequence(rng, 3 + t % 3, M);
        const auto down = walk_down_complex(seq).sequence;
        for (int m = 0; m <= M; ++m) {
            for (int n = 0; m + n <= M; ++n) {
                bool any = false;
                for (int j = 0; m + n + 2 * j <= M; ++j) {
                    any = any || seq.at(m + j, n + j) > 0.0;
                }
                mismatches += ((down.at(m, n) > 0.0) != any) ? 1 : 0;
            }
        }
    }
    ok = ok && mismatches == 0;
    return {ok, fmt("%g support-transfer mismatches in 100 cases", mismatches)};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"real roundtrip walk_down(walk_up(b)) = b", real_roundtrip},
        {"Poisson inverse series recovers circle coefficients", poisson_series},
        {"walk_up agrees with quadrature at d = 4", quadrature_vs_recursion},
        {"cross_project agrees with reconstruct-then-recompute", cross_projection},
        {"disk polynomial orthogonality", disk_orthogonality},
        {"disk polynomial dimension recursion", disk_recursion},
        {"complex roundtrip walk_down_complex(walk_up_complex(a)) = a", complex_roundtrip},
        {"walk_up_complex agrees with disk quadrature", complex_quadrature},
        {"walks conserve mass", mass_conservation},
        {"SPD progression diagnostics and support transfer", spd_diagnostics},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  [%zu] %s: %s\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, outcome.detail.c_str());
        failed += outcome.passed ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
