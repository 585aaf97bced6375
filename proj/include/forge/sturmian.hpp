#pragma once

// The Sturmian shift of a rotation: orbit coding against {[0,a), [a,1)},
// exact cylinder intervals (factor language, membership, invariant
// measures of cylinders), right-special words, occurrence-frequency
// checks, and the uniform recurrence gap.
//
// Cylinders of words of length n are cells of the common refinement of
// the pulled-back two-cell partition; the cell lengths equal the values
// of the unique invariant measure. Everything runs on a guarded rational
// truncation of the rotation (see rotation.hpp).

#include "forge/exact.hpp"
#include "forge/rotation.hpp"
#include "forge/words.hpp"

#include <optional>
#include <vector>

namespace forge::sturmian {

using words::Word;

struct CylinderInterval {
    Word word;
    bool empty = true;
    Rat lo, hi;  // arc [lo, hi) on the circle; lo > hi means it wraps through 0
    Rat length;  // = invariant measure of the cylinder
};

/// Letter i is '0' iff start + i*alpha mod 1 lies in [0, alpha).
Word code_point(const rotation::RotationNumber& rot, const Rat& start, std::size_t length);

CylinderInterval cylinder(const rotation::RotationNumber& rot, const Word& word);

bool membership(const rotation::RotationNumber& rot, const Word& word);

/// Measure of the cylinder (0 when the word is not a factor).
Rat cylinder_measure(const rotation::RotationNumber& rot, const Word& word);

/// All factors of length n, sorted; exactly n+1 of them.
std::vector<Word> language(const rotation::RotationNumber& rot, std::size_t n);

/// Factors of length n paired with their cylinder measures, sorted by word.
std::vector<std::pair<Word, Rat>> language_with_measures(const rotation::RotationNumber& rot,
                                                         std::size_t n);

struct RightSpecialWitness {
    Word word;        // unique w of its length with both extensions in the language
    Word ext0, ext1;  // w0 and w1
};

RightSpecialWitness right_special(const rotation::RotationNumber& rot, std::size_t m);

struct FrequencyEntry {
    Word word;
    std::size_t count = 0;
    Rat empirical;   // count / |host|
    Rat measure;     // cylinder measure
    Rat deviation;   // |empirical - measure|
    bool pass = false;
};

struct FrequencyReport {
    std::size_t scale = 0;
    std::size_t host_length = 0;
    bool pass = false;
    Rat worst_deviation;
    std::vector<FrequencyEntry> entries;
};

/// For every factor w of length `scale`, compare its occurrence rate in
/// host against the cylinder measure; pass iff all deviations < epsilon.
/// Host must itself be a factor of the shift.
FrequencyReport frequency_check(const rotation::RotationNumber& rot, const Word& host,
                                std::size_t scale, const Rat& epsilon);

/// Largest distance between consecutive occurrences, over all factors of
/// the given length, measured on the coded orbit segment of the given
/// horizon. Recomputed at twice the horizon; instability throws
/// CheckFailure("horizon too small"). Requires horizon >= 100*word_length.
std::size_t uniform_gap(const rotation::RotationNumber& rot, std::size_t word_length,
                        std::size_t horizon);

/// uniform_gap with a doubling retry schedule until stable.
std::size_t uniform_gap_stable(const rotation::RotationNumber& rot, std::size_t word_length,
                               std::size_t initial_horizon = 0,
                               std::size_t horizon_cap = 1u << 24);

} // namespace forge::sturmian
