#pragma once

// Marker rewriting schemes. A rule (S, D, E, pi) rewrites every occurrence of
// S d E (d in the data set D) to S pi(d) E, identity elsewhere. The overlap
// verifier certifies that no two matches can ever claim intersecting data
// cells and no data cell can sit under another match's markers; under those
// conditions the simultaneous rewrite is a well defined invertible sliding
// block code whose inverse is the same scheme with inverted bijections.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autshift/block_code.hpp"

namespace autshift {

struct MarkerRule {
    Word start;                      ///< S, nonempty
    Word end;                        ///< E, nonempty
    std::vector<Word> data;          ///< D, sorted, distinct, one common length
    std::vector<std::size_t> perm;   ///< pi: data[i] -> data[perm[i]], bijective

    std::size_t data_len() const { return data.front().size(); }
    std::size_t width() const { return start.size() + data_len() + end.size(); }
    /// S d E as one word.
    Word pattern(std::size_t data_index) const {
        Word w = start;
        w.insert(w.end(), data[data_index].begin(), data[data_index].end());
        w.insert(w.end(), end.begin(), end.end());
        return w;
    }
};

/// Rule from explicit rewrite pairs d -> d'; domain and range must coincide
/// as sets (that makes the map a bijection of the data set).
inline MarkerRule make_rule(Word start, Word end,
                            const std::vector<std::pair<Word, Word>>& mapping) {
    if (start.empty() || end.empty())
        throw InvalidArgument("marker rule needs nonempty start and end markers");
    if (mapping.empty()) throw InvalidArgument("marker rule needs at least one data word");
    MarkerRule rule;
    rule.start = std::move(start);
    rule.end = std::move(end);
    for (const auto& [from, to] : mapping) {
        if (from.size() != mapping.front().first.size() || to.size() != from.size())
            throw InvalidArgument("all data words of a rule must share one length");
        rule.data.push_back(from);
    }
    std::sort(rule.data.begin(), rule.data.end());
    if (std::adjacent_find(rule.data.begin(), rule.data.end()) != rule.data.end())
        throw InvalidArgument("duplicate data word in rule");
    auto index_of = [&rule](const Word& w) {
        auto it = std::lower_bound(rule.data.begin(), rule.data.end(), w);
        if (it == rule.data.end() || *it != w)
            throw InvalidArgument("data image " + word_to_string(w) +
                                  " is not itself a data word (map must be a bijection "
                                  "of the data set)");
        return static_cast<std::size_t>(it - rule.data.begin());
    };
    rule.perm.assign(rule.data.size(), rule.data.size());
    for (const auto& [from, to] : mapping) rule.perm[index_of(from)] = index_of(to);
    std::vector<bool> hit(rule.data.size(), false);
    for (std::size_t p : rule.perm) {
        if (p >= rule.data.size() || hit[p])
            throw InvalidArgument("data map is not a bijection of the data set");
        hit[p] = true;
    }
    return rule;
}

class MarkerScheme {
public:
    MarkerScheme(int alphabet, std::vector<MarkerRule> rules, std::string label)
        : alphabet_(alphabet), rules_(std::move(rules)), label_(std::move(label)) {
        check_alphabet_size(alphabet_);
        for (const auto& r : rules_) {
            check_word_alphabet(r.start, alphabet_, "start marker");
            check_word_alphabet(r.end, alphabet_, "end marker");
            if (r.data.empty()) throw InvalidArgument("rule with empty data set");
            for (const auto& d : r.data) {
                if (d.size() != r.data_len() || d.empty())
                    throw InvalidArgument("data words must share one positive length");
                check_word_alphabet(d, alphabet_, "data word");
            }
            if (!std::is_sorted(r.data.begin(), r.data.end()) ||
                std::adjacent_find(r.data.begin(), r.data.end()) != r.data.end())
                throw InvalidArgument("data words must be sorted and distinct");
            if (r.perm.size() != r.data.size())
                throw InvalidArgument("data bijection size mismatch");
            std::vector<bool> hit(r.perm.size(), false);
            for (std::size_t p : r.perm) {
                if (p >= r.perm.size() || hit[p])
                    throw InvalidArgument("data map is not a bijection of the data set");
                hit[p] = true;
            }
        }
    }

    int alphabet() const { return alphabet_; }
    const std::vector<MarkerRule>& rules() const { return rules_; }
    const std::string& label() const { return label_; }

private:
    int alphabet_;
    std::vector<MarkerRule> rules_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Overlap verification

struct OverlapViolation {
    enum class Kind { DataData, DataMarker };
    std::size_t rule_i, rule_j;
    long long offset;        ///< match j starts at this offset relative to match i
    Kind kind;
    Word witness;            ///< joint window, unconstrained cells filled with 0
    long long witness_origin;  ///< position of witness[0] relative to match i
};

inline const char* to_string(OverlapViolation::Kind k) {
    return k == OverlapViolation::Kind::DataData ? "data-data" : "data-marker";
}

struct OverlapVerdict {
    bool ok = true;
    std::vector<OverlapViolation> violations;  ///< sorted by (rule_i, rule_j, offset, kind)
};

namespace detail {

inline bool intervals_meet(long long a_lo, long long a_hi, long long b_lo, long long b_hi) {
    return std::max(a_lo, b_lo) < std::min(a_hi, b_hi);  // half-open intervals
}

/// Do pattern_i (at 0) and pattern_j (at offset t) agree on shared cells?
inline bool patterns_consistent(const Word& pi, const Word& pj, long long t) {
    long long lo = std::max<long long>(0, t);
    long long hi = std::min<long long>((long long)pi.size(), t + (long long)pj.size());
    for (long long c = lo; c < hi; ++c)
        if (pi[(std::size_t)c] != pj[(std::size_t)(c - t)]) return false;
    return true;
}

}  // namespace detail

/// Certify that simultaneous matches never produce intersecting data-data or
/// data-marker intervals. Every ordered rule pair is swept over all offsets
/// where the data cells of the first rule reach the second rule's window;
/// a violation records one concrete co-matching window as witness.
inline OverlapVerdict verify_scheme(const MarkerScheme& s) {
    OverlapVerdict verdict;
    const auto& rules = s.rules();
    // Patterns S d E materialized once per (rule, data word).
    std::vector<std::vector<Word>> patterns(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t d = 0; d < rules[i].data.size(); ++d)
            patterns[i].push_back(rules[i].pattern(d));

    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& ri = rules[i];
        const long long si = (long long)ri.start.size(), di = (long long)ri.data_len();
        const long long wi = (long long)ri.width();
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const auto& rj = rules[j];
            const long long sj = (long long)rj.start.size(), dj = (long long)rj.data_len();
            const long long wj = (long long)rj.width();
            // Offsets where data_i = [si, si+di) meets the window of match j.
            for (long long t = si - wj + 1; t <= si + di - 1; ++t) {
                if (i == j && t == 0) continue;  // a match co-exists with itself
                const bool data_data =
                    detail::intervals_meet(si, si + di, t + sj, t + sj + dj);
                const bool data_marker =
                    detail::intervals_meet(si, si + di, t, t + sj) ||
                    detail::intervals_meet(si, si + di, t + sj + dj, t + wj);
                if (!data_data && !data_marker) continue;
                for (std::size_t a = 0; a < patterns[i].size(); ++a) {
                    bool found = false;
                    for (std::size_t b = 0; b < patterns[j].size() && !found; ++b) {
                        if (!detail::patterns_consistent(patterns[i][a], patterns[j][b], t))
                            continue;
                        found = true;
                        long long lo = std::min<long long>(0, t);
                        long long hi = std::max(wi, t + wj);
                        Word witness((std::size_t)(hi - lo), 0);
                        for (long long c = 0; c < wi; ++c)
                            witness[(std::size_t)(c - lo)] = patterns[i][a][(std::size_t)c];
                        for (long long c = 0; c < wj; ++c)
                            witness[(std::size_t)(c + t - lo)] = patterns[j][b][(std::size_t)c];
                        if (data_data)
                            verdict.violations.push_back({i, j, t,
                                                          OverlapViolation::Kind::DataData,
                                                          witness, lo});
                        if (data_marker)
                            verdict.violations.push_back({i, j, t,
                                                          OverlapViolation::Kind::DataMarker,
                                                          witness, lo});
                    }
                    if (found) break;  // one witness per (i, j, t) is enough
                }
            }
        }
    }
    verdict.ok = verdict.violations.empty();
    return verdict;
}

// ---------------------------------------------------------------------------
// Compilation to a sliding block code

/// All (rule, position) matches of the scheme in x over positions [lo, hi).
inline std::vector<std::pair<std::size_t, long long>> matches_in_range(
    const MarkerScheme& s, const BiConfiguration& x, long long lo, long long hi) {
    std::vector<std::pair<std::size_t, long long>> out;
    for (long long p = lo; p < hi; ++p) {
        for (std::size_t i = 0; i < s.rules().size(); ++i) {
            const auto& r = s.rules()[i];
            bool ok = true;
            for (std::size_t c = 0; c < r.start.size() && ok; ++c)
                ok = x.value_at(p + (long long)c) == r.start[c];
            Word d;
            for (std::size_t c = 0; c < r.data_len() && ok; ++c)
                d.push_back(x.value_at(p + (long long)(r.start.size() + c)));
            if (ok) ok = std::binary_search(r.data.begin(), r.data.end(), d);
            long long e0 = p + (long long)(r.start.size() + r.data_len());
            for (std::size_t c = 0; c < r.end.size() && ok; ++c)
                ok = x.value_at(e0 + (long long)c) == r.end[c];
            if (ok) out.emplace_back(i, p);
        }
    }
    return out;
}

/// Compile a verified scheme into the rewriting code. The local rule decides
/// the image of cell 0: it scans every way a match could place cell 0 inside
/// its data segment (end marker first, then data lookup, then start marker)
/// and rewrites accordingly; unmatched cells pass through unchanged.
inline Code compile_scheme(const MarkerScheme& s) {
    if (s.rules().empty()) return identity_code(s.alphabet());
    OverlapVerdict v = verify_scheme(s);
    if (!v.ok) {
        const auto& f = v.violations.front();
        throw UnverifiedScheme(
            "scheme " + s.label() + " fails overlap verification: rules (" +
            std::to_string(f.rule_i) + ", " + std::to_string(f.rule_j) + ") at offset " +
            std::to_string(f.offset) + " admit a joint match of kind " +
            std::string(to_string(f.kind)) + ", witness " + word_to_string(f.witness));
    }

    long long lo = 0, hi = 0;
    for (const auto& r : s.rules()) {
        lo = std::min(lo, -((long long)r.start.size() + (long long)r.data_len() - 1));
        hi = std::max(hi, (long long)r.data_len() + (long long)r.end.size() - 1);
    }
    std::vector<long long> support;
    for (long long c = lo; c <= hi; ++c) support.push_back(c);

    auto rules = std::make_shared<std::vector<MarkerRule>>(s.rules());
    auto rule_fn = [rules, lo](const Sym* v) -> Sym {
        for (const auto& r : *rules) {
            const long long si = (long long)r.start.size();
            const long long di = (long long)r.data_len();
            const long long ei = (long long)r.end.size();
            for (long long c = 0; c < di; ++c) {
                // Candidate match whose data cell number c is our cell 0.
                const long long p = -si - c;
                const Sym* end = v + (p + si + di - lo);
                bool ok = true;
                for (long long q = 0; q < ei && ok; ++q) ok = end[q] == r.end[(std::size_t)q];
                if (!ok) continue;
                const Sym* data = v + (p + si - lo);
                Word d(data, data + di);
                auto it = std::lower_bound(r.data.begin(), r.data.end(), d);
                if (it == r.data.end() || *it != d) continue;
                const Sym* start = v + (p - lo);
                for (long long q = 0; q < si && ok; ++q)
                    ok = start[q] == r.start[(std::size_t)q];
                if (!ok) continue;
                std::size_t idx = (std::size_t)(it - r.data.begin());
                return r.data[r.perm[idx]][(std::size_t)c];
            }
        }
        return v[-lo];
    };
    return Code(s.alphabet(), std::move(support), std::move(rule_fn), s.label());
}

// ---------------------------------------------------------------------------
// Scheme algebra

/// Same markers and data, every bijection replaced by its inverse.
inline MarkerScheme invert_scheme(const MarkerScheme& s) {
    std::vector<MarkerRule> rules = s.rules();
    for (auto& r : rules) {
        std::vector<std::size_t> inv(r.perm.size());
        for (std::size_t i = 0; i < r.perm.size(); ++i) inv[r.perm[i]] = i;
        r.perm = std::move(inv);
    }
    return MarkerScheme(s.alphabet(), std::move(rules), s.label() + "_inv");
}

/// True iff every rule's bijection is self-inverse; such a verified scheme
/// compiles to an involution of the full shift.
inline bool is_involution(const MarkerScheme& s) {
    for (const auto& r : s.rules())
        for (std::size_t i = 0; i < r.perm.size(); ++i)
            if (r.perm[r.perm[i]] != i) return false;
    return true;
}

/// Image of the scheme under a symbol permutation; compiling it gives the
/// conjugate (perm code) ∘ g ∘ (perm code)⁻¹ of the compiled original.
inline MarkerScheme rename_scheme(const MarkerScheme& s, const std::vector<Sym>& perm,
                                  std::string label) {
    if ((int)perm.size() != s.alphabet())
        throw InvalidArgument("symbol permutation size must match the alphabet");
    auto map_word = [&perm](const Word& w) {
        Word out;
        out.reserve(w.size());
        for (Sym c : w) out.push_back(perm[c]);
        return out;
    };
    std::vector<MarkerRule> rules;
    for (const auto& r : s.rules()) {
        std::vector<std::pair<Word, Word>> mapping;
        for (std::size_t i = 0; i < r.data.size(); ++i)
            mapping.emplace_back(map_word(r.data[i]), map_word(r.data[r.perm[i]]));
        rules.push_back(make_rule(map_word(r.start), map_word(r.end), mapping));
    }
    return MarkerScheme(s.alphabet(), std::move(rules), std::move(label));
}

inline bool operator==(const MarkerRule& a, const MarkerRule& b) {
    return a.start == b.start && a.end == b.end && a.data == b.data && a.perm == b.perm;
}

inline bool operator==(const MarkerScheme& a, const MarkerScheme& b) {
    return a.alphabet() == b.alphabet() && a.rules() == b.rules();
}

}  // namespace autshift
