#include "forge/sturmian.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace forge::sturmian {

namespace {

using rotation::Truncation;

// Arc [lo, hi) on the circle, wrapping when lo >= hi (whole circle is
// represented before any constraint cuts it).
struct Arc {
    Rat lo, hi;
    bool wraps() const { return lo >= hi; }
    Rat length() const { return wraps() ? Rat(1) - lo + hi : hi - lo; }
};

bool in_arc(const Arc& a, const Rat& x) {
    if (a.wraps()) return x >= a.lo || x < a.hi;
    return x >= a.lo && x < a.hi;
}

// Intersection of the running cylinder with one pulled-back half-open
// arc. Cells of the refinement are intervals, so a two-component result
// signals an arithmetic bug and fails hard.
std::optional<Arc> intersect(const std::optional<Arc>& cur, const Arc& nxt) {
    if (!cur) return std::nullopt;
    std::vector<Rat> candidates;  // potential left endpoints of components
    if (in_arc(nxt, cur->lo)) candidates.push_back(cur->lo);
    if (in_arc(*cur, nxt.lo)) candidates.push_back(nxt.lo);
    std::optional<Arc> result;
    for (const Rat& lo : candidates) {
        // right endpoint: whichever of the two his comes first going right
        Rat span_cur = cur->hi >= lo ? cur->hi - lo : Rat(1) - lo + cur->hi;
        Rat span_nxt = nxt.hi >= lo ? nxt.hi - lo : Rat(1) - lo + nxt.hi;
        Rat span = std::min(span_cur, span_nxt);
        if (span <= 0) continue;
        Arc piece{lo, mod1(lo + span)};
        if (result && !(result->lo == piece.lo && result->hi == piece.hi))
            throw CheckFailure("cylinder intersection split into two arcs");
        result = piece;
    }
    return result;
}

struct Workspace {
    Truncation tr;
    Rat alpha;
};

Workspace workspace_for(const rotation::RotationNumber& rot, std::size_t steps) {
    Truncation tr = rotation::truncation_for_steps(rot, std::max<std::size_t>(steps, 4));
    return {tr, tr.value};
}

} // namespace

Word code_point(const rotation::RotationNumber& rot, const Rat& start, std::size_t length) {
    if (start < 0 || start >= 1) throw InputError("code_point start must lie in [0,1)");
    Workspace ws = workspace_for(rot, length + 2);
    Word w;
    w.reserve(length);
    Rat x = start;
    for (std::size_t i = 0; i < length; ++i) {
        w += (x < ws.alpha) ? '0' : '1';
        x += ws.alpha;
        if (x >= 1) x -= 1;
    }
    return w;
}

CylinderInterval cylinder(const rotation::RotationNumber& rot, const Word& word) {
    if (word.empty()) throw InputError("cylinder of the empty word");
    words::check_binary(word);
    Workspace ws = workspace_for(rot, word.size() + 2);
    std::optional<Arc> arc = Arc{Rat(0), Rat(0)};  // whole circle ([0,0) wraps)
    Rat shift = 0;                                 // i*alpha mod 1
    for (std::size_t i = 0; i < word.size(); ++i) {
        // {x : x + i*alpha in P_letter} = P_letter - i*alpha
        Arc cell = (word[i] == '0') ? Arc{mod1(-shift), mod1(ws.alpha - shift)}
                                    : Arc{mod1(ws.alpha - shift), mod1(-shift)};
        arc = intersect(arc, cell);
        if (!arc) break;
        shift += ws.alpha;
        if (shift >= 1) shift -= 1;
    }
    CylinderInterval out;
    out.word = word;
    if (arc) {
        out.empty = false;
        out.lo = arc->lo;
        out.hi = arc->hi;
        out.length = arc->length();
    } else {
        out.length = 0;
    }
    return out;
}

bool membership(const rotation::RotationNumber& rot, const Word& word) {
    return !cylinder(rot, word).empty;
}

Rat cylinder_measure(const rotation::RotationNumber& rot, const Word& word) {
    return cylinder(rot, word).length;
}

std::vector<std::pair<Word, Rat>> language_with_measures(const rotation::RotationNumber& rot,
                                                         std::size_t n) {
    if (n < 1) throw InputError("language needs n >= 1");
    Workspace ws = workspace_for(rot, n + 2);
    // cell endpoints: {j*alpha mod 1 : j = -1, 0, ..., n-1}
    std::vector<Rat> pts;
    pts.reserve(n + 1);
    Rat x = mod1(-ws.alpha);
    for (std::size_t j = 0; j < n + 1; ++j) {
        pts.push_back(x);
        x += ws.alpha;
        if (x >= 1) x -= 1;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() != n + 1)
        throw CheckFailure("coincident endpoints in the cylinder partition");

    std::vector<std::pair<Word, Rat>> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rat lo = pts[i];
        Rat hi = (i + 1 < pts.size()) ? pts[i + 1] : pts[0];
        Rat len = (i + 1 < pts.size()) ? hi - lo : Rat(1) - lo + hi;
        Rat mid = mod1(lo + len / 2);
        Word w;
        w.reserve(n);
        Rat y = mid;
        for (std::size_t t = 0; t < n; ++t) {
            w += (y < ws.alpha) ? '0' : '1';
            y += ws.alpha;
            if (y >= 1) y -= 1;
        }
        out.emplace_back(std::move(w), len);
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].first == out[i - 1].first)
            throw CheckFailure("duplicate word across distinct cells");
    return out;
}

std::vector<Word> language(const rotation::RotationNumber& rot, std::size_t n) {
    auto wm = language_with_measures(rot, n);
    std::vector<Word> out;
    out.reserve(wm.size());
    for (auto& [w, len] : wm) out.push_back(std::move(w));
    return out;
}

RightSpecialWitness right_special(const rotation::RotationNumber& rot, std::size_t m) {
    if (m < 1) throw InputError("right_special needs m >= 1");
    auto lang = language(rot, m + 1);
    std::map<Word, std::vector<char>> prefixes;
    for (const Word& w : lang) prefixes[w.substr(0, m)].push_back(w.back());
    std::optional<RightSpecialWitness> witness;
    for (auto& [prefix, exts] : prefixes) {
        if (exts.size() == 2) {
            if (witness) throw CheckFailure("two right-special words of length " +
                                            std::to_string(m));
            witness = RightSpecialWitness{prefix, prefix + '0', prefix + '1'};
        } else if (exts.size() != 1) {
            throw CheckFailure("factor with " + std::to_string(exts.size()) +
                               " right extensions");
        }
    }
    if (!witness) throw CheckFailure("no right-special word of length " + std::to_string(m));
    return *witness;
}

FrequencyReport frequency_check(const rotation::RotationNumber& rot, const Word& host,
                                std::size_t scale, const Rat& epsilon) {
    if (scale < 1) throw InputError("frequency_check needs scale >= 1");
    if (host.size() < scale)
        throw InputError("host shorter than the requested scale");
    if (!membership(rot, host)) throw InputError("host is not a factor of the shift");

    FrequencyReport rep;
    rep.scale = scale;
    rep.host_length = host.size();
    rep.pass = true;
    rep.worst_deviation = 0;
    for (auto& [w, measure] : language_with_measures(rot, scale)) {
        FrequencyEntry e;
        e.word = w;
        e.count = words::occurrences(w, host).size();
        e.empirical = Rat(Int(e.count), Int(host.size()));
        e.measure = measure;
        e.deviation = e.empirical > measure ? e.empirical - measure : measure - e.empirical;
        e.pass = e.deviation < epsilon;
        rep.pass = rep.pass && e.pass;
        rep.worst_deviation = std::max(rep.worst_deviation, e.deviation);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

namespace {

std::size_t max_gap_all_words(const rotation::RotationNumber& rot, std::size_t word_length,
                              std::size_t horizon) {
    Word segment = code_point(rot, Rat(0), horizon);
    auto lang = language(rot, word_length);
    std::size_t g = 0;
    for (const Word& v : lang) {
        auto occ = words::occurrences(v, segment);
        if (occ.size() < 2)
            throw CheckFailure("horizon too small: a factor of length " +
                               std::to_string(word_length) + " occurs < 2 times");
        for (std::size_t i = 1; i < occ.size(); ++i)
            g = std::max(g, occ[i] - occ[i - 1]);
    }
    return g;
}

} // namespace

std::size_t uniform_gap(const rotation::RotationNumber& rot, std::size_t word_length,
                        std::size_t horizon) {
    if (word_length < 1) throw InputError("uniform_gap needs word_length >= 1");
    if (horizon < 100 * word_length)
        throw InputError("uniform_gap horizon must be >= 100 * word_length");
    std::size_t g1 = max_gap_all_words(rot, word_length, horizon);
    std::size_t g2 = max_gap_all_words(rot, word_length, 2 * horizon);
    if (g1 != g2) throw CheckFailure("horizon too small: gap unstable under doubling");
    return g1;
}

std::size_t uniform_gap_stable(const rotation::RotationNumber& rot, std::size_t word_length,
                               std::size_t initial_horizon, std::size_t horizon_cap) {
    std::size_t horizon = std::max<std::size_t>(initial_horizon, 100 * word_length);
    horizon = std::max<std::size_t>(horizon, 2048);
    while (true) {
        try {
            return uniform_gap(rot, word_length, horizon);
        } catch (const CheckFailure&) {
            horizon *= 2;
            if (horizon > horizon_cap)
                throw ResourceError("uniform gap did not stabilize below horizon cap");
        }
    }
}

} // namespace forge::sturmian
