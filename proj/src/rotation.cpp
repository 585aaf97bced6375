#include "forge/rotation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace forge::rotation {

RotationNumber RotationNumber::parse(const std::string& cf) {
    RotationNumber rot;
    std::size_t semi = cf.find(';');
    if (semi == std::string::npos)
        throw InputError("continued fraction must look like \"0;a1,a2,...\"");
    std::string head = cf.substr(0, semi);
    if (head != "0") throw InputError("integer part of the rotation number must be 0");
    rot.quotients.push_back(0);
    std::stringstream rest(cf.substr(semi + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) {
        if (tok.empty()) throw InputError("empty partial quotient");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (...) {
            throw InputError("bad partial quotient: " + tok);
        }
        if (pos != tok.size() || v < 1)
            throw InputError("partial quotients must be integers >= 1: " + tok);
        rot.quotients.push_back(v);
    }
    if (rot.quotients.size() < 2) throw InputError("need at least one partial quotient");
    return rot;
}

RotationNumber RotationNumber::default_preset(std::size_t depth) {
    RotationNumber rot;
    rot.quotients.push_back(0);
    if (depth < 2) depth = 2;
    rot.quotients.push_back(2);
    for (std::size_t k = 2; k < depth; ++k)
        rot.quotients.push_back(static_cast<std::int64_t>(10 * k));
    return rot;
}

std::string RotationNumber::to_string() const {
    std::string s = "0;";
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(quotients[i]);
    }
    return s;
}

std::vector<Convergent> convergents(const RotationNumber& rot, std::size_t k) {
    if (rot.quotients.empty() || rot.quotients[0] != 0)
        throw InputError("rotation number must have integer part 0");
    if (k + 1 > rot.quotients.size())
        throw DepthExhausted("insufficient depth: " + std::to_string(k + 1) +
                             " quotients required, " +
                             std::to_string(rot.quotients.size()) + " materialized");
    std::vector<Convergent> out;
    Int p_prev = 1, q_prev = 0;  // h_{-1}, k_{-1}
    Int p_cur = 0, q_cur = 1;    // h_0 = a0 = 0, k_0 = 1
    for (std::size_t i = 1; i <= k; ++i) {
        Int a = rot.quotients[i];
        Int p = a * p_cur + p_prev;
        Int q = a * q_cur + q_prev;
        out.push_back({p, q});
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p;
        q_cur = q;
    }
    return out;
}

namespace {

Truncation truncation_at_index(const RotationNumber& rot, std::size_t k) {
    auto cs = convergents(rot, std::min(k + 1, rot.quotients.size() - 1));
    const Convergent& c = cs.at(k - 1);
    Truncation tr;
    tr.value = Rat(c.p, c.q);
    tr.index = k;
    if (k < cs.size()) {
        tr.error_bound = Rat(1, c.q * cs[k].q);
    } else {
        // next quotient not materialized; a_{k+1} >= 1 gives a valid bound
        Int q_prev = (k >= 2) ? cs[k - 2].q : Int(1);
        tr.error_bound = Rat(1, c.q * (c.q + q_prev));
    }
    return tr;
}

// Incremental gap bookkeeping over integer residues mod q. The point set
// is {i*p mod q}; arcs are residue differences, all over denominator q.
class GapEngine {
  public:
    GapEngine(std::uint64_t p, std::uint64_t q) : p_(p), q_(q), next_(0), count_(0) {}

    // insert the point count_ * p mod q
    void step() {
        std::uint64_t r = next_;
        next_ += p_;
        if (next_ >= q_) next_ -= q_;
        ++count_;
        if (points_.empty()) {
            points_.insert(r);
            add_gap(q_);
            return;
        }
        auto it = points_.lower_bound(r);
        std::uint64_t succ, pred;
        if (it == points_.end()) {
            succ = *points_.begin();
            pred = *points_.rbegin();
        } else {
            succ = *it;
            pred = (it == points_.begin()) ? *points_.rbegin() : *std::prev(it);
        }
        if (succ == r) throw InternalCollision{};
        std::uint64_t old_gap = dist(pred, succ);
        remove_gap(old_gap);
        add_gap(dist(pred, r));
        add_gap(dist(r, succ));
        points_.insert(r);
    }

    struct InternalCollision {};

    std::size_t count() const { return count_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t min_units() const { return gaps_.begin()->first; }
    std::uint64_t max_units() const { return gaps_.rbegin()->first; }

    std::vector<std::pair<std::uint64_t, std::size_t>> snapshot() const {
        std::vector<std::pair<std::uint64_t, std::size_t>> v;
        v.reserve(gaps_.size());
        for (auto& [len, mult] : gaps_) v.emplace_back(len, mult);
        return v;
    }

  private:
    std::uint64_t dist(std::uint64_t a, std::uint64_t b) const {
        return a < b ? b - a : q_ - a + b;
    }
    void add_gap(std::uint64_t g) { ++gaps_[g]; }
    void remove_gap(std::uint64_t g) {
        auto it = gaps_.find(g);
        if (it == gaps_.end()) throw CheckFailure("gap engine lost an arc");
        if (--it->second == 0) gaps_.erase(it);
    }

    std::uint64_t p_, q_, next_;
    std::size_t count_;
    std::set<std::uint64_t> points_;
    std::map<std::uint64_t, std::size_t> gaps_;
};

struct EngineSetup {
    GapEngine engine;
    Truncation tr;
    Int next_q;  // denominator after tr (for the guard)
};

// Guard: steps * error < min_gap / 2, i.e. with error < 1/(q*q_next) and
// min_gap = units/q this is 2*steps < units * q_next.
bool guard_ok(std::size_t steps, std::uint64_t min_units, const Int& next_q) {
    return Int(2) * Int(steps) < Int(min_units) * next_q;
}

EngineSetup engine_for(const RotationNumber& rot, std::size_t index) {
    Truncation tr = truncation_at_index(rot, index);
    Int q = rat_den(tr.value);
    Int p = rat_num(tr.value);
    if (q > Int(std::uint64_t(1) << 62))
        throw DepthExhausted("truncation denominator exceeds the 64-bit gap engine");
    Int next_q;
    {
        auto cs = convergents(rot, std::min(index + 1, rot.quotients.size() - 1));
        if (index < cs.size())
            next_q = cs[index].q;
        else
            next_q = q + ((index >= 2) ? cs[index - 2].q : Int(1));
    }
    return {GapEngine(p.convert_to<std::uint64_t>(), q.convert_to<std::uint64_t>()), tr,
            next_q};
}

std::size_t max_index(const RotationNumber& rot) { return rot.quotients.size() - 1; }

} // namespace

Truncation truncate_to_rational(const RotationNumber& rot, const Int& min_denominator) {
    for (std::size_t k = 1; k <= max_index(rot); ++k) {
        Truncation tr = truncation_at_index(rot, k);
        if (rat_den(tr.value) >= min_denominator) return tr;
    }
    throw DepthExhausted("depth exhausted before reaching denominator " +
                         min_denominator.str());
}

Truncation truncation_for_steps(const RotationNumber& rot, std::size_t steps) {
    for (std::size_t index = 1; index <= max_index(rot); ++index) {
        EngineSetup setup = engine_for(rot, index);
        if (rat_den(setup.tr.value) <= Int(steps) + 2) continue;
        try {
            for (std::size_t i = 0; i < steps; ++i) setup.engine.step();
        } catch (GapEngine::InternalCollision&) {
            continue;
        }
        if (guard_ok(steps, setup.engine.min_units(), setup.next_q)) return setup.tr;
    }
    throw DepthExhausted("depth exhausted: no truncation certifies " +
                         std::to_string(steps) + " orbit steps");
}

GapSpectrum gap_spectrum(const RotationNumber& rot, std::size_t n) {
    if (n < 1) throw InputError("gap_spectrum needs n >= 1");
    for (std::size_t index = 1; index <= max_index(rot); ++index) {
        EngineSetup setup = engine_for(rot, index);
        if (rat_den(setup.tr.value) <= Int(n) + 2) continue;
        try {
            for (std::size_t i = 0; i < n; ++i) setup.engine.step();
        } catch (GapEngine::InternalCollision&) {
            continue;
        }
        if (!guard_ok(n, setup.engine.min_units(), setup.next_q)) continue;
        GapSpectrum spec;
        spec.step_count = n;
        Int q = rat_den(setup.tr.value);
        for (auto& [units, mult] : setup.engine.snapshot())
            spec.gaps.emplace_back(Rat(Int(units), q), mult);
        spec.check_invariants();
        return spec;
    }
    throw DepthExhausted("depth exhausted computing the " + std::to_string(n) +
                         "-step spectrum");
}

void GapSpectrum::check_invariants() const {
    if (gaps.empty()) throw CheckFailure("empty gap spectrum");
    Rat total = 0;
    for (auto& [len, mult] : gaps) total += len * Rat(Int(mult));
    if (total != 1) throw CheckFailure("gap lengths do not sum to 1");
    if (gaps.size() > 3)
        throw CheckFailure("more than three distinct gap lengths at n = " +
                           std::to_string(step_count));
    if (gaps.size() == 3 && gaps[2].first != gaps[0].first + gaps[1].first)
        throw CheckFailure("three-length spectrum violates largest = sum of other two");
    for (std::size_t i = 1; i < gaps.size(); ++i)
        if (!(gaps[i - 1].first < gaps[i].first))
            throw CheckFailure("gap spectrum not sorted");
}

std::vector<ScaleCertificate> find_balanced_scales(const RotationNumber& rot,
                                                   const Rat& epsilon,
                                                   std::size_t count,
                                                   std::size_t n_min,
                                                   std::size_t scan_limit) {
    if (count < 1) throw InputError("find_balanced_scales needs count >= 1");
    if (!(epsilon > 0) || epsilon > 1)
        throw InputError("epsilon must lie in (0, 1]");
    std::vector<ScaleCertificate> out;
    const Rat threshold = Rat(1) - epsilon;

    std::size_t index = 1;
    while (true) {
        // pick a truncation, scan with it until its guard fails, then deepen
        EngineSetup setup = [&] {
            while (true) {
                if (index > max_index(rot))
                    throw DepthExhausted("depth exhausted during balanced-scale scan");
                EngineSetup s = engine_for(rot, index);
                if (rat_den(s.tr.value) > Int(scan_limit) + 2) return s;
                ++index;
            }
        }();
        Int q = rat_den(setup.tr.value);
        Rat prev_ratio = 1;  // 1-step partition: single arc
        bool restart = false;
        try {
            for (std::size_t n = 1; n <= scan_limit; ++n) {
                setup.engine.step();
                if (n < 2) continue;
                if (!guard_ok(n, setup.engine.min_units(), setup.next_q)) {
                    ++index;
                    restart = true;
                    break;
                }
                Rat mn(Int(setup.engine.min_units()), q);
                Rat mx(Int(setup.engine.max_units()), q);
                Rat ratio = mn / mx;
                if (n > n_min && ratio > threshold) {
                    ScaleCertificate cert;
                    cert.n = n;
                    cert.min_gap = mn;
                    cert.max_gap = mx;
                    cert.ratio = ratio;
                    cert.epsilon = epsilon;
                    cert.prev_ratio = prev_ratio;
                    cert.prev_doubling_ok = prev_ratio >= ratio / 2;
                    out.push_back(cert);
                    if (out.size() == count) return out;
                }
                prev_ratio = ratio;
            }
        } catch (GapEngine::InternalCollision&) {
            ++index;
            restart = true;
        }
        if (restart) {
            out.clear();  // rescan from 1 at the deeper truncation
            continue;
        }
        throw ResourceError("budget exhausted: no " + std::to_string(count - out.size()) +
                            " more balanced scales with epsilon " + rat_str(epsilon) +
                            " in n in (" + std::to_string(n_min) + ", " +
                            std::to_string(scan_limit) + "]");
    }
}

bool construction_admissible(const RotationNumber& rot) {
    Truncation tr = truncation_for_steps(rot, 8);
    Rat lo(3, 8), hi(5, 8);
    // error bound keeps the truncated value away from the endpoints
    return tr.value - tr.error_bound > lo && tr.value + tr.error_bound < hi;
}

} // namespace forge::rotation
