#pragma once

// Binary-word machinery: border arrays and minimal periods, linear-time
// occurrence scans, powers, covering concatenations, and the serialized
// forms ('0'/'1' strings, optionally run-length encoded).

#include "forge/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace forge::words {

// Words are ASCII strings over {'0','1'}. Length is the only structure.
using Word = std::string;

/// Throws InputError unless w is over {0,1} (empty allowed).
void check_binary(const Word& w);

/// Border array b[i] = length of the longest proper border of w[0..i].
std::vector<std::size_t> border_array(const Word& w);

/// Smallest p >= 1 with w[i] == w[i+p] for all valid i. |w| >= 1.
std::size_t minimal_period(const Word& w);

/// All start indices of needle in haystack (overlaps counted), KMP scan.
std::vector<std::size_t> occurrences(const Word& needle, const Word& haystack);

/// Containment test; empty needle is a subword of everything.
bool is_subword(const Word& u, const Word& w);

/// e >= 1 concatenated copies; respects the global word-length cap.
Word power(const Word& w, std::size_t e);

/// Largest k with u.substr(|u|-k) == v.substr(|v|-k).
std::size_t common_suffix(const Word& u, const Word& v);
std::size_t common_prefix(const Word& u, const Word& v);

/// Max distance between consecutive start positions of needle in text.
/// Returns 0 if needle occurs fewer than twice.
std::size_t max_occurrence_gap(const Word& needle, const Word& text);

struct CoveringPair {
    Word u, v;                 // equal-length concatenations of the codewords
    std::string u_index;       // block index words over {'0','1'}
    std::string v_index;
    std::size_t pattern_len;   // index patterns enumerated to build u
};

/// Two distinct equal-length concatenations of code0/code1, each
/// containing every element of target_language as a subword. u walks all
/// binary index patterns of length pattern_len in enumeration order, v in
/// reversed order. Containment is rechecked against target_language
/// before returning. pattern_len is chosen from m: max(2, ceil(m/L)+1).
CoveringPair covering_pair(const Word& code0, const Word& code1,
                           std::size_t m,
                           const std::vector<Word>& target_language);

/// Expand an index word over {'0','1'} into the concatenation of
/// code0/code1 blocks it denotes.
Word expand_index(const std::string& index, const Word& code0, const Word& code1);

// Serialized form: plain '0'/'1' or "RLE:<letter>x<count>,...".
std::string encode_word(const Word& w, std::size_t rle_threshold = 256);
Word decode_word(const std::string& s);

} // namespace forge::words
