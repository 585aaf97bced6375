#include "forge/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace forge {

std::size_t max_word_len() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("FORGE_MAX_WORD_LEN")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
            throw InputError("FORGE_MAX_WORD_LEN must be a positive integer");
        }
        return static_cast<std::size_t>(300'000'000);
    }();
    return cap;
}

} // namespace forge

namespace forge::words {

void check_binary(const Word& w) {
    for (char c : w)
        if (c != '0' && c != '1')
            throw InputError("word contains a letter outside {0,1}");
}

std::vector<std::size_t> border_array(const Word& w) {
    std::vector<std::size_t> b(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = b[k - 1];
        if (w[i] == w[k]) ++k;
        b[i] = k;
    }
    return b;
}

std::size_t minimal_period(const Word& w) {
    if (w.empty()) throw InputError("minimal_period of empty word");
    auto b = border_array(w);
    return w.size() - b.back();
}

std::vector<std::size_t> occurrences(const Word& needle, const Word& haystack) {
    if (needle.empty()) throw InputError("occurrences with empty needle");
    std::vector<std::size_t> out;
    if (needle.size() > haystack.size()) return out;
    auto fail = border_array(needle);
    std::size_t k = 0;
    for (std::size_t i = 0; i < haystack.size(); ++i) {
        while (k > 0 && haystack[i] != needle[k]) k = fail[k - 1];
        if (haystack[i] == needle[k]) ++k;
        if (k == needle.size()) {
            out.push_back(i + 1 - needle.size());
            k = fail[k - 1];
        }
    }
    return out;
}

bool is_subword(const Word& u, const Word& w) {
    if (u.empty()) return true;
    return !occurrences(u, w).empty();
}

Word power(const Word& w, std::size_t e) {
    if (e < 1) throw InputError("power with exponent < 1");
    if (w.size() * e > max_word_len())
        throw ResourceError("power exceeds FORGE_MAX_WORD_LEN (" +
                            std::to_string(w.size() * e) + " letters)");
    Word out;
    out.reserve(w.size() * e);
    for (std::size_t i = 0; i < e; ++i) out += w;
    return out;
}

std::size_t common_suffix(const Word& u, const Word& v) {
    std::size_t k = 0, n = std::min(u.size(), v.size());
    while (k < n && u[u.size() - 1 - k] == v[v.size() - 1 - k]) ++k;
    return k;
}

std::size_t common_prefix(const Word& u, const Word& v) {
    std::size_t k = 0, n = std::min(u.size(), v.size());
    while (k < n && u[k] == v[k]) ++k;
    return k;
}

std::size_t max_occurrence_gap(const Word& needle, const Word& text) {
    auto occ = occurrences(needle, text);
    std::size_t g = 0;
    for (std::size_t i = 1; i < occ.size(); ++i) g = std::max(g, occ[i] - occ[i - 1]);
    return g;
}

Word expand_index(const std::string& index, const Word& code0, const Word& code1) {
    if (code0.size() != code1.size())
        throw InputError("expand_index: codewords of unequal length");
    if (index.size() * code0.size() > max_word_len())
        throw ResourceError("expand_index exceeds FORGE_MAX_WORD_LEN");
    Word out;
    out.reserve(index.size() * code0.size());
    for (char c : index) out += (c == '0' ? code0 : code1);
    return out;
}

CoveringPair covering_pair(const Word& code0, const Word& code1,
                           std::size_t m,
                           const std::vector<Word>& target_language) {
    if (m < 1) throw InputError("covering_pair: m must be >= 1");
    if (code0.size() != code1.size() || code0 == code1)
        throw InputError("covering_pair: needs two distinct equal-length codewords");
    const std::size_t L = code0.size();
    const std::size_t k = std::max<std::size_t>(2, (m + L - 1) / L + 1);
    if (k > 20) throw ResourceError("covering_pair: index pattern length " +
                                    std::to_string(k) + " too large to enumerate");

    CoveringPair cp;
    cp.pattern_len = k;
    const std::size_t npat = std::size_t(1) << k;
    for (std::size_t p = 0; p < npat; ++p) {
        std::string pat;
        for (std::size_t j = 0; j < k; ++j) pat += ((p >> (k - 1 - j)) & 1) ? '1' : '0';
        cp.u_index += pat;
    }
    for (std::size_t p = npat; p-- > 0;) {
        std::string pat;
        for (std::size_t j = 0; j < k; ++j) pat += ((p >> (k - 1 - j)) & 1) ? '1' : '0';
        cp.v_index += pat;
    }
    // equal length by construction; pad with "01" (= code0 code1) if a
    // future pattern scheme ever makes them differ
    while (cp.u_index.size() < cp.v_index.size()) cp.u_index += "01";
    while (cp.v_index.size() < cp.u_index.size()) cp.v_index += "01";
    if (cp.u_index == cp.v_index)
        throw CheckFailure("covering_pair: index words coincide");

    cp.u = expand_index(cp.u_index, code0, code1);
    cp.v = expand_index(cp.v_index, code0, code1);

    for (const Word& w : target_language) {
        if (!is_subword(w, cp.u) || !is_subword(w, cp.v))
            throw CheckFailure("covering_pair: verification failed for a word of length " +
                               std::to_string(w.size()));
    }
    return cp;
}

std::string encode_word(const Word& w, std::size_t rle_threshold) {
    if (w.size() <= rle_threshold) return w;
    std::string out = "RLE:";
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) out += ',';
        first = false;
        out += w[i];
        out += 'x';
        out += std::to_string(j - i);
        i = j;
    }
    return out;
}

Word decode_word(const std::string& s) {
    if (s.rfind("RLE:", 0) != 0) {
        check_binary(s);
        return s;
    }
    Word out;
    std::size_t i = 4;
    while (i < s.size()) {
        char letter = s[i];
        if ((letter != '0' && letter != '1') || i + 1 >= s.size() || s[i + 1] != 'x')
            throw InputError("malformed RLE word");
        std::size_t j = i + 2, count = 0;
        if (j >= s.size() || !isdigit(static_cast<unsigned char>(s[j])))
            throw InputError("malformed RLE count");
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) {
            count = count * 10 + std::size_t(s[j] - '0');
            if (out.size() + count > max_word_len())
                throw ResourceError("RLE word exceeds FORGE_MAX_WORD_LEN");
            ++j;
        }
        out.append(count, letter);
        if (j < s.size()) {
            if (s[j] != ',') throw InputError("malformed RLE separator");
            ++j;
        }
        i = j;
    }
    return out;
}

} // namespace forge::words
