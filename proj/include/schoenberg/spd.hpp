#pragma once
/**
 * Truncated strict-positive-definiteness diagnostics on complex spheres.
 *
 * A member of Upsilon_{2q} is strictly positive definite iff the set
 * {m - n : a^{q-2}_{m,n} > 0} meets every arithmetic progression of Z. A
 * computation only ever sees finitely many coefficients and finitely many
 * progressions, so the checks here can certify failures (a missed
 * progression of a finitely supported sequence) but never success: an
 * all-pass report means "consistent up to modulus K", nothing more.
 *
 * Class transfers are propositional: they consume membership claims and emit
 * the conclusions licensed by the transfer rules; they never recompute evidence.
 */

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex_coeffs.hpp"

namespace schoenberg {

inline constexpr double kSupportThreshold = 1e-12;

struct SupportPattern {
    std::set<int> diffs;
    double threshold = kSupportThreshold;
    int truncation = 0;
    /// The source sequence carried valid-mass evidence.
    bool evidence_valid = false;
    /// The source sequence is finitely supported, so a missed progression is a genuine failure.
    bool finite_support = false;
};

inline SupportPattern support_pattern(const ComplexSchoenbergSequence& seq, double threshold = kSupportThreshold)
{
    SupportPattern pattern;
    pattern.threshold = threshold;
    pattern.truncation = seq.max_degree;
    pattern.evidence_valid = seq.valid_mass;
    pattern.finite_support = seq.finite_support;
    for (const auto& [key, value] : seq.entries) {
        if (value > threshold) {
            pattern.diffs.insert(key.first - key.second);
        }
    }
    return pattern;
}

struct ProgressionVerdict {
    int modulus = 1;
    int residue = 0;
    bool met = false;
};

enum class SpdSummary { ConsistentWithSpd, Violates, Inconclusive };

inline std::string to_string(SpdSummary s)
{
    switch (s) {
    case SpdSummary::ConsistentWithSpd:
        return "consistent-with-SPD";
    case SpdSummary::Violates:
        return "violates";
    case SpdSummary::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

struct SpdReport {
    int max_modulus = 1;
    std::vector<ProgressionVerdict> verdicts;
    SpdSummary summary = SpdSummary::Inconclusive;
    /// First missed progression (k, r), ordered by modulus then residue.
    std::optional<std::pair<int, int>> violation;
    /// The violation holds for the full sequence, not just within the truncation.
    bool certified = false;
    std::vector<std::string> transfer_notes;
};

inline int positive_mod(int value, int modulus)
{
    const int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

inline SpdReport check_progressions(const SupportPattern& pattern, int K)
{
    if (K < 1) {
        throw DomainError("check_progressions needs K >= 1");
    }
    SpdReport report;
    report.max_modulus = K;
    for (int k = 1; k <= K; ++k) {
        std::vector<bool> met(static_cast<std::size_t>(k), false);
        for (int diff : pattern.diffs) {
            met[static_cast<std::size_t>(positive_mod(diff, k))] = true;
        }
        for (int r = 0; r < k; ++r) {
            const bool hit = met[static_cast<std::size_t>(r)];
            report.verdicts.push_back({k, r, hit});
            if (!hit && !report.violation) {
                report.violation = std::make_pair(k, r);
            }
        }
    }
    if (!pattern.evidence_valid) {
        report.summary = SpdSummary::Inconclusive;
        report.transfer_notes.push_back("sequence lacks valid-mass evidence; verdicts are not usable as membership claims");
    } else if (report.violation) {
        report.summary = SpdSummary::Violates;
        report.certified = pattern.finite_support;
        if (!report.certified) {
            report.transfer_notes.push_back("violation holds within truncation only");
        }
    } else {
        report.summary = SpdSummary::ConsistentWithSpd;
        report.transfer_notes.push_back("all progressions up to modulus " + std::to_string(K) +
                                        " met; this does not prove strict positive definiteness");
    }
    return report;
}

enum class SphereKind { Complex, Real };

enum class MembershipStatus {
    Member,       // in the class, strictness unknown
    Strict,       // in the strict subclass
    NonStrict,    // in the class but not the strict subclass
    Inconclusive, // no usable evidence
};

/// Membership claim for Upsilon_{2q} (Complex, dimension = q) or Psi_d (Real, dimension = d).
struct ClassClaim {
    SphereKind sphere = SphereKind::Complex;
    int dimension = 2;
    MembershipStatus status = MembershipStatus::Inconclusive;

    std::string class_name() const
    {
        return sphere == SphereKind::Complex ? "Upsilon_" + std::to_string(2 * dimension)
                                             : "Psi_" + std::to_string(dimension);
    }

    std::string describe() const
    {
        const std::string base = class_name();
        switch (status) {
        case MembershipStatus::Member:
            return base;
        case MembershipStatus::Strict:
            return base + "+";
        case MembershipStatus::NonStrict:
            return base + " \\ " + base + "+";
        case MembershipStatus::Inconclusive:
            return base + "?";
        }
        return base;
    }

    bool operator==(const ClassClaim&) const = default;
};

struct Implication {
    std::string rule;
    std::vector<ClassClaim> premises;
    ClassClaim conclusion;

    std::string statement() const
    {
        std::string s;
        for (std::size_t i = 0; i < premises.size(); ++i) {
            s += (i ? " and " : "") + premises[i].describe();
        }
        return s + " => " + conclusion.describe();
    }
};

/// Conclusions licensed by a claim on Upsilon_{2q} plus a second claim, either
/// on Upsilon_{2q'} or on Psi_d for the restriction phi_r o cos. Empty when
/// either premise is inconclusive.
///
///   Upsilon_{2q}+ and Upsilon_{2q'}                => Upsilon_{2q'}+
///   Upsilon_{2q} \ Upsilon_{2q}+ and Upsilon_{2q'} => Upsilon_{2q'} \ Upsilon_{2q'}+
///   Upsilon_{2q} and Psi_d+                        => Psi_{2q-1}+
///   Upsilon_{2q}+ and Psi_d                        => Psi_d+
inline std::vector<Implication> transfer_class(const ClassClaim& complex_claim, const ClassClaim& other)
{
    if (complex_claim.sphere != SphereKind::Complex) {
        throw DomainError("transfer_class: first claim must concern a complex sphere");
    }
    std::vector<Implication> out;
    if (complex_claim.status == MembershipStatus::Inconclusive || other.status == MembershipStatus::Inconclusive) {
        return out;
    }
    const bool complex_strict = complex_claim.status == MembershipStatus::Strict;
    const bool complex_non_strict = complex_claim.status == MembershipStatus::NonStrict;

    if (other.sphere == SphereKind::Complex) {
        if (complex_strict) {
            out.push_back({"spd-transfer-complex",
                           {complex_claim, other},
                           {SphereKind::Complex, other.dimension, MembershipStatus::Strict}});
        } else if (complex_non_strict) {
            out.push_back({"non-spd-transfer-complex",
                           {complex_claim, other},
                           {SphereKind::Complex, other.dimension, MembershipStatus::NonStrict}});
        }
        return out;
    }

    if (other.status == MembershipStatus::Strict) {
        out.push_back({"spd-restriction-lift",
                       {complex_claim, other},
                       {SphereKind::Real, 2 * complex_claim.dimension - 1, MembershipStatus::Strict}});
    }
    if (complex_strict) {
        out.push_back({"spd-restriction-from-complex",
                       {complex_claim, other},
                       {SphereKind::Real, other.dimension, MembershipStatus::Strict}});
    }
    return out;
}

/// Claim on Upsilon_{2q} supported by a sequence and its progression report.
/// Only certified violations yield a strictness verdict.
inline ClassClaim claim_from_report(const ComplexSchoenbergSequence& seq, const SpdReport& report)
{
    ClassClaim claim{SphereKind::Complex, seq.q, MembershipStatus::Inconclusive};
    if (!seq.valid_mass || report.summary == SpdSummary::Inconclusive) {
        return claim;
    }
    claim.status = (report.summary == SpdSummary::Violates && report.certified) ? MembershipStatus::NonStrict
                                                                                 : MembershipStatus::Member;
    return claim;
}

/// Transfer driven by a sequence at q, its report, and membership evidence at q'.
inline std::vector<Implication> transfer_class(const ComplexSchoenbergSequence& seq_q, const SpdReport& report,
                                               const ClassClaim& at_q_prime)
{
    return transfer_class(claim_from_report(seq_q, report), at_q_prime);
}

} // namespace schoenberg
