#pragma once

// Exact circle arithmetic for an irrational rotation given by a prefix of
// its continued fraction: convergents, rational truncations with error
// bounds, gap spectra of n-step partitions, and balanced-scale
// certificates.
//
// All computation happens on a rational truncation p/q of the rotation
// number. Every operation first certifies that the truncation error
// cannot change the combinatorics at the working scale (error times the
// number of orbit steps stays below half the minimal gap), deepening the
// truncation as needed. Within that guard, results are exact statements
// about every irrational with the given quotient prefix.

#include "forge/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace forge::rotation {

struct RotationNumber {
    // partial quotients a0, a1, a2, ...; a0 is the integer part and must
    // be 0 here, all later quotients >= 1
    std::vector<std::int64_t> quotients;

    static RotationNumber parse(const std::string& cf);  // "0;2,20,30"
    /// [0; 2, 20, 30, 40, ...]: near 1/2 with unbounded quotients.
    static RotationNumber default_preset(std::size_t depth = 12);
    std::size_t depth() const { return quotients.size(); }
    std::string to_string() const;
};

struct Convergent {
    Int p, q;
};

/// First k convergents p_i/q_i (i = 1..k, skipping the integer part).
std::vector<Convergent> convergents(const RotationNumber& rot, std::size_t k);

struct Truncation {
    Rat value;        // p_k/q_k in [0,1)
    Rat error_bound;  // strict bound on |alpha - value|
    std::size_t index;  // k
};

/// Truncation at the first convergent with denominator >= min_denominator.
Truncation truncate_to_rational(const RotationNumber& rot, const Int& min_denominator);

struct GapSpectrum {
    std::size_t step_count = 0;
    std::vector<std::pair<Rat, std::size_t>> gaps;  // (length, multiplicity), ascending
    Rat min_gap() const { return gaps.front().first; }
    Rat max_gap() const { return gaps.back().first; }
    Rat ratio() const { return min_gap() / max_gap(); }
    /// Three Gap Theorem shape: <= 3 distinct lengths, total mass 1,
    /// and when 3 occur the largest is the sum of the other two.
    void check_invariants() const;
};

/// Exact arc lengths between the circularly sorted points {i*alpha},
/// 0 <= i < n. Deepens the truncation until the guard holds.
GapSpectrum gap_spectrum(const RotationNumber& rot, std::size_t n);

struct ScaleCertificate {
    std::size_t n = 0;   // step count
    Rat min_gap, max_gap, ratio;
    Rat epsilon;
    Rat prev_ratio;      // ratio of the (n-1)-step partition
    bool prev_doubling_ok = false;  // prev_ratio >= ratio/2
    bool valid() const { return ratio > Rat(1) - epsilon; }
};

/// First `count` step counts n > n_min whose partition satisfies
/// min/max > 1 - epsilon, scanning n upward one at a time. Throws
/// ResourceError("budget exhausted ...") after scan_limit steps.
std::vector<ScaleCertificate> find_balanced_scales(const RotationNumber& rot,
                                                   const Rat& epsilon,
                                                   std::size_t count,
                                                   std::size_t n_min,
                                                   std::size_t scan_limit = 100000);

/// Truncation whose guard certifies orbit combinatorics for
/// `steps` points (used by the Sturmian layer).
Truncation truncation_for_steps(const RotationNumber& rot, std::size_t steps);

/// True when the truncated value lies in (3/8, 5/8).
bool construction_admissible(const RotationNumber& rot);

} // namespace forge::rotation
