#pragma once
// Command-line front end. `run_cli` is kept separate from main() so the
// commands can be driven in-process by the test suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schoenberg/schoenberg.hpp"
#include "schoenberg/validation.hpp"

namespace schoenberg::cli {

enum ExitCode : int { kOk = 0, kMalformedInput = 1, kNumericalFailure = 2 };

namespace detail {

struct Options {
    std::string in;
    std::string out;
    std::string family = "constant";
    std::string method = "integral";
    int d = 1;
    int source_d = 0;
    int d_prime = 1;
    int q = 2;
    int N = 20;
    int M = 4;
    int m = 0;
    int n = 0;
    int n_out = -1;
    int nodes = 0;
    int K = 0;
    int q_prime = 0;
    int trials = 25;
    double r = 0.5;
    double tail_tol = 1e-12;
    double threshold = kSupportThreshold;
    std::uint64_t seed = kDefaultSeed;
    std::vector<double> theta;
    std::vector<double> x;
    std::vector<double> y;
};

inline void emit(const Json& doc, const Options& opt, std::ostream& out)
{
    const std::string text = doc.dump(2) + "\n";
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out);
    if (!file) {
        throw FormatError("--out", "cannot write " + opt.out);
    }
    file << text;
}

inline Json load(const Options& opt)
{
    if (opt.in.empty()) {
        throw FormatError("--in", "input file required");
    }
    return read_json_file(opt.in);
}

template <typename Seq>
int status_of(const Seq& seq, std::ostream& err, bool ill_conditioned = false)
{
    if (ill_conditioned) {
        err << "warning: coefficient mass exceeds 1 beyond tolerance (quadrature under-resolved?)\n";
        return kNumericalFailure;
    }
    if (!seq.valid_mass) {
        err << "warning: sequence fails the mass/negativity check (mass " << seq.mass() << ")\n";
        return kNumericalFailure;
    }
    return kOk;
}

inline int cmd_coeffs(const Options& opt, std::ostream& out, std::ostream& err)
{
    IsotropicFunction psi;
    bool polynomial = false;
    int degree = 0;
    if (opt.family == "constant") {
        psi = constant_function();
        polynomial = true;
    } else if (opt.family == "cosine") {
        psi = cosine_function();
        polynomial = true;
        degree = 1;
    } else if (opt.family == "poisson") {
        psi = poisson_kernel(opt.r);
    } else if (opt.family == "gegenbauer-mixture") {
        psi = gegenbauer_mixture(opt.seed, opt.N, opt.source_d > 0 ? opt.source_d : opt.d);
        polynomial = true;
        degree = opt.N;
    } else {
        throw FormatError("--family", "unknown real family '" + opt.family + "'");
    }
    const auto nodes = opt.nodes > 0 ? static_cast<std::size_t>(opt.nodes) : default_theta_nodes(static_cast<std::size_t>(opt.N));
    auto result = compute_real_coeffs(psi, opt.d, opt.N, theta_rule(nodes));
    result.sequence.finite_support = polynomial && degree <= opt.N;
    emit(to_json(result.sequence), opt, out);
    return status_of(result.sequence, err, result.ill_conditioned);
}

inline int cmd_ccoeffs(const Options& opt, std::ostream& out, std::ostream& err)
{
    DiskFunction phi;
    int degree = 0;
    if (opt.family == "constant") {
        phi = {[](const DiskPoint&) { return Complex(1.0); }, "constant"};
    } else if (opt.family == "disk-monomial") {
        phi = disk_monomial(opt.m, opt.n);
        degree = opt.m + opt.n;
    } else if (opt.family == "disk-mixture") {
        phi = disk_mixture(opt.seed, opt.M, opt.q);
        degree = opt.M;
    } else {
        throw FormatError("--family", "unknown disk family '" + opt.family + "'");
    }
    const auto radial = opt.nodes > 0 ? static_cast<std::size_t>(opt.nodes) : default_radial_nodes(opt.M, opt.q);
    const auto rule = disk_quadrature(opt.q, radial, default_angular_nodes(opt.M));
    auto result = compute_complex_coeffs(phi, opt.q, opt.M, rule);
    result.sequence.finite_support = degree <= opt.M;
    emit(to_json(result.sequence), opt, out);
    if (result.max_imaginary > 1e-10) {
        err << "warning: coefficients carry imaginary parts up to " << result.max_imaginary << "\n";
        return kNumericalFailure;
    }
    return status_of(result.sequence, err, result.ill_conditioned);
}

inline int cmd_reconstruct(const Options& opt, std::ostream& out, std::ostream&)
{
    const auto seq = sequence_from_json(load(opt));
    Json doc;
    if (const auto* real = std::get_if<RealSchoenbergSequence>(&seq)) {
        std::vector<double> thetas = opt.theta;
        if (thetas.empty()) {
            for (int i = 0; i <= 10; ++i) {
                thetas.push_back(std::numbers::pi * i / 10.0);
            }
        }
        std::vector<double> values;
        for (double t : thetas) {
            if (t < 0.0 || t > std::numbers::pi) {
                throw FormatError("--theta", "angles must lie in [0, pi]");
            }
            values.push_back(reconstruct(*real, t));
        }
        doc = {{"theta", thetas}, {"value", values}};
    } else {
        const auto& cseq = std::get<ComplexSchoenbergSequence>(seq);
        if (opt.x.size() != opt.y.size()) {
            throw FormatError("--y", "needs as many values as --x");
        }
        std::vector<double> xs = opt.x;
        std::vector<double> ys = opt.y;
        if (xs.empty()) {
            for (int i = 0; i <= 10; ++i) {
                xs.push_back(-1.0 + 0.2 * i);
                ys.push_back(0.0);
            }
        }
        Json values = Json::array();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Complex v = reconstruct_complex(cseq, {xs[i], ys[i]});
            values.push_back(Json::array({v.real(), v.imag()}));
        }
        doc = {{"x", xs}, {"y", ys}, {"value", values}};
    }
    emit(doc, opt, out);
    return kOk;
}

inline int cmd_walk_up(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto seq = walk_up(real_sequence_from_json(load(opt)));
    emit(to_json(seq), opt, out);
    return status_of(seq, err);
}

inline int cmd_walk_down(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto result = walk_down(real_sequence_from_json(load(opt)), opt.n_out, opt.tail_tol);
    if (result.unresolved_mass > 0.0) {
        err << "unresolved tail mass: " << result.unresolved_mass << "\n";
    }
    emit(to_json(result.sequence), opt, out);
    return status_of(result.sequence, err);
}

inline int cmd_project(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto seq = real_sequence_from_json(load(opt));
    const auto nodes = opt.nodes > 0 ? static_cast<std::size_t>(opt.nodes)
                                     : default_theta_nodes(static_cast<std::size_t>(seq.truncation()));
    const auto rule = theta_rule(nodes);
    RealSchoenbergSequence projected;
    if (opt.method == "integral") {
        projected = cross_project(seq, opt.d_prime, rule);
    } else if (opt.method == "recompute") {
        projected = cross_project_via_reconstruct(seq, opt.d_prime, rule);
    } else {
        throw FormatError("--method", "expected 'integral' or 'recompute'");
    }
    emit(to_json(projected), opt, out);
    return status_of(projected, err);
}

inline int cmd_cwalk_up(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto seq = walk_up_complex(complex_sequence_from_json(load(opt)));
    emit(to_json(seq), opt, out);
    return status_of(seq, err);
}

inline int cmd_cwalk_down(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto result = walk_down_complex(complex_sequence_from_json(load(opt)), opt.tail_tol);
    if (result.unresolved_mass > 0.0) {
        err << "unresolved tail mass: " << result.unresolved_mass << "\n";
    }
    emit(to_json(result.sequence), opt, out);
    return status_of(result.sequence, err);
}

inline int cmd_spd_check(const Options& opt, std::ostream& out, std::ostream&)
{
    const auto seq = complex_sequence_from_json(load(opt));
    const int K = opt.K > 0 ? opt.K : std::max(seq.max_degree, 1);
    const auto pattern = support_pattern(seq, opt.threshold);
    const auto report = check_progressions(pattern, K);

    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        verdicts.push_back({{"modulus", v.modulus}, {"residue", v.residue}, {"met", v.met}});
    }
    Json implications = Json::array();
    std::vector<std::string> notes = report.transfer_notes;
    if (opt.q_prime >= 2 && opt.q_prime != seq.q) {
        // Membership evidence at q' comes from transporting the sequence there.
        auto moved = seq;
        while (moved.q < opt.q_prime) {
            moved = walk_up_complex(moved);
        }
        while (moved.q > opt.q_prime) {
            moved = walk_down_complex(moved, opt.tail_tol).sequence;
        }
        const ClassClaim at_q_prime{SphereKind::Complex, opt.q_prime,
                                    moved.valid_mass ? MembershipStatus::Member : MembershipStatus::Inconclusive};
        const auto derived = transfer_class(seq, report, at_q_prime);
        if (derived.empty()) {
            notes.push_back("no class transfer: premise evidence inconclusive or not strictness-bearing");
        }
        for (const auto& imp : derived) {
            implications.push_back({{"rule", imp.rule}, {"statement", imp.statement()}});
        }
    }

    Json doc{{"pattern",
              {{"diffs", pattern.diffs},
               {"threshold", pattern.threshold},
               {"truncation", pattern.truncation}}},
             {"verdicts", verdicts},
             {"summary", to_string(report.summary)},
             {"violation", report.violation ? Json::array({report.violation->first, report.violation->second}) : Json()},
             {"certified", report.certified},
             {"notes", notes},
             {"implications", implications}};
    emit(doc, opt, out);
    return kOk;
}

inline int cmd_selftest(const Options& opt, std::ostream& out, std::ostream&)
{
    const auto results = run_invariant_suite({opt.seed, opt.trials});
    int failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (observed " << r.observed << ", tolerance "
            << r.tolerance << ")\n";
        failed += r.passed ? 0 : 1;
    }
    out << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    return failed == 0 ? kOk : kNumericalFailure;
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    using detail::Options;
    Options opt;
    CLI::App app{"Schoenberg coefficient toolkit for real and complex spheres"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", opt.in, "input sequence JSON file");
        sub->add_option("--out", opt.out, "output file (stdout if omitted)");
    };

    auto* coeffs = app.add_subcommand("coeffs", "real-sphere coefficients of a built-in function");
    coeffs->add_option("--family", opt.family, "constant | cosine | poisson | gegenbauer-mixture");
    coeffs->add_option("--r", opt.r, "Poisson parameter in (0, 1)");
    coeffs->add_option("--d", opt.d, "sphere dimension");
    coeffs->add_option("--source-d", opt.source_d, "dimension the mixture is drawn at (default --d)");
    coeffs->add_option("--N", opt.N, "truncation degree");
    coeffs->add_option("--nodes", opt.nodes, "quadrature nodes (default max(128, 2N+32))");
    coeffs->add_option("--seed", opt.seed, "mixture seed");
    add_io(coeffs);

    auto* ccoeffs = app.add_subcommand("ccoeffs", "complex-sphere coefficients of a built-in function");
    ccoeffs->add_option("--family", opt.family, "constant | disk-monomial | disk-mixture");
    ccoeffs->add_option("--q", opt.q, "complex sphere index q >= 2");
    ccoeffs->add_option("--M", opt.M, "maximal bi-degree m + n");
    ccoeffs->add_option("--m", opt.m, "monomial power of z");
    ccoeffs->add_option("--n", opt.n, "monomial power of conj(z)");
    ccoeffs->add_option("--nodes", opt.nodes, "radial quadrature nodes");
    ccoeffs->add_option("--seed", opt.seed, "mixture seed");
    add_io(ccoeffs);

    auto* recon = app.add_subcommand("reconstruct", "evaluate the expansion of a sequence");
    recon->add_option("--theta", opt.theta, "angles in [0, pi] (real sequences)");
    recon->add_option("--x", opt.x, "real parts of disk points (complex sequences)");
    recon->add_option("--y", opt.y, "imaginary parts of disk points");
    add_io(recon);

    auto* up = app.add_subcommand("walk-up", "real sequence from d to d + 2");
    add_io(up);

    auto* down = app.add_subcommand("walk-down", "real sequence from d + 2 to d");
    down->add_option("--N", opt.n_out, "output truncation (default: input truncation)");
    down->add_option("--tail-tol", opt.tail_tol, "relative tail tolerance for infinite inputs");
    add_io(down);

    auto* project = app.add_subcommand("project", "real sequence from d to any d' < d");
    project->add_option("--d-prime", opt.d_prime, "target dimension")->required();
    project->add_option("--nodes", opt.nodes, "quadrature nodes");
    project->add_option("--method", opt.method, "integral | recompute");
    add_io(project);

    auto* cup = app.add_subcommand("cwalk-up", "complex sequence from q to q + 1");
    add_io(cup);

    auto* cdown = app.add_subcommand("cwalk-down", "complex sequence from q + 1 to q");
    cdown->add_option("--tail-tol", opt.tail_tol, "relative tail tolerance for infinite inputs");
    add_io(cdown);

    auto* spd = app.add_subcommand("spd-check", "arithmetic-progression support diagnostics");
    spd->add_option("--K", opt.K, "largest modulus (default max_degree)");
    spd->add_option("--threshold", opt.threshold, "support threshold");
    spd->add_option("--q-prime", opt.q_prime, "second sphere index for class transfer");
    spd->add_option("--tail-tol", opt.tail_tol, "tail tolerance used when walking down");
    add_io(spd);

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--seed", opt.seed, "random seed");
    selftest->add_option("--trials", opt.trials, "random trials per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformedInput;
    }

    try {
        if (*coeffs) return detail::cmd_coeffs(opt, out, err);
        if (*ccoeffs) return detail::cmd_ccoeffs(opt, out, err);
        if (*recon) return detail::cmd_reconstruct(opt, out, err);
        if (*up) return detail::cmd_walk_up(opt, out, err);
        if (*down) return detail::cmd_walk_down(opt, out, err);
        if (*project) return detail::cmd_project(opt, out, err);
        if (*cup) return detail::cmd_cwalk_up(opt, out, err);
        if (*cdown) return detail::cmd_cwalk_down(opt, out, err);
        if (*spd) return detail::cmd_spd_check(opt, out, err);
        if (*selftest) return detail::cmd_selftest(opt, out, err);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const InvalidSequence& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalFailure;
    }
    return kMalformedInput;
}

} // namespace schoenberg::cli
