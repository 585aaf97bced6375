#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// normalized rationals. No floating point enters any combinatorial
// decision; doubles appear only in the spectral probe and in reports.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace forge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Reduce r into [0,1) (circle coordinates).
inline Rat mod1(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    Int rem = n - q * d;
    if (rem < 0) rem += d;
    return Rat(rem, d);
}

inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// Error taxonomy shared by all modules. The CLI maps these onto exit
// codes: input 2, check failure 1, resource cap 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DepthExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Word-materialization budget in letters. Overridable via the
/// FORGE_MAX_WORD_LEN environment variable.
std::size_t max_word_len();

/// Deterministic 64-bit stream (splitmix64), used for generic index
/// streams and randomized tests. Seeds are recorded in artifacts.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    bool bit() { return next() & 1; }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

} // namespace forge
