#pragma once

// The boundary space Omega: one-sided eventually periodic sequences
// x_0 x_1 x_2 ... with x_0 != x_1, under the exact ultrametric
// d(x, y) = 2^(-first disagreement). Includes the embedding phi into
// two-sided configurations (constant left tail), its left inverse psi,
// the depth statistic r, and exhaustive enumeration of the classes
// C_m = { x in Omega^0 : r(x) = m } at a declared truncation scale.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "autshift/biconfig.hpp"
#include "autshift/dyadic.hpp"

namespace autshift {

/// A point of Omega: finite prefix then a periodic tail, canonicalized so the
/// prefix is minimal (its last cell breaks the tail pattern). x_0 != x_1.
class OmegaPoint {
public:
    static OmegaPoint from_parts(int alphabet, Word prefix, Word tail) {
        check_alphabet_size(alphabet);
        check_word_alphabet(prefix, alphabet, "omega prefix");
        check_word_alphabet(tail, alphabet, "omega tail");
        OmegaPoint x(alphabet, std::move(prefix), PeriodicWord(std::move(tail)));
        x.normalize_in_place();
        if (x.value_at(0) == x.value_at(1))
            throw NotInOmega("omega point needs x_0 != x_1, got " + x.to_literal());
        return x;
    }

    int alphabet() const { return alphabet_; }
    const Word& prefix() const { return prefix_; }
    const PeriodicWord& tail() const { return tail_; }

    Sym value_at(long long j) const {
        if (j < (long long)prefix_.size()) return prefix_[static_cast<std::size_t>(j)];
        return tail_.at(j - (long long)prefix_.size());
    }

    Word window(long long count) const {
        Word w;
        w.reserve(static_cast<std::size_t>(count));
        for (long long j = 0; j < count; ++j) w.push_back(value_at(j));
        return w;
    }

    friend bool operator==(const OmegaPoint& a, const OmegaPoint& b) {
        return a.alphabet_ == b.alphabet_ && a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
    }
    friend bool operator!=(const OmegaPoint& a, const OmegaPoint& b) { return !(a == b); }
    friend bool operator<(const OmegaPoint& a, const OmegaPoint& b) {
        if (a.prefix_ != b.prefix_) return a.prefix_ < b.prefix_;
        return a.tail_.period() < b.tail_.period();
    }

    /// Literal form: "prefix" (tail)*
    std::string to_literal() const {
        return "\"" + word_to_string(prefix_) + "\" (" + word_to_string(tail_.period()) + ")*";
    }

private:
    OmegaPoint(int alphabet, Word prefix, PeriodicWord tail)
        : alphabet_(alphabet), prefix_(std::move(prefix)), tail_(std::move(tail)) {}

    void normalize_in_place() {
        while (!prefix_.empty() && prefix_.back() == tail_.at(-1)) {
            prefix_.pop_back();
            tail_ = tail_.rotated_right();
        }
    }

    int alphabet_;
    Word prefix_;
    PeriodicWord tail_;
};

/// First index where two points disagree; nullopt if they are equal.
/// Two eventually periodic sequences agreeing up to
/// max(prefix lengths) + lcm(periods) agree everywhere.
inline std::optional<long long> first_disagreement(const OmegaPoint& a, const OmegaPoint& b) {
    long long bound = (long long)std::max(a.prefix().size(), b.prefix().size()) +
                      lcm_capped((long long)a.tail().length(), (long long)b.tail().length());
    for (long long j = 0; j < bound; ++j)
        if (a.value_at(j) != b.value_at(j)) return j;
    return std::nullopt;
}

/// Exact ultrametric d(a, b) = 2^(-first disagreement), bounded by 1.
inline Dyadic omega_distance(const OmegaPoint& a, const OmegaPoint& b) {
    auto j = first_disagreement(a, b);
    if (!j) return Dyadic::zero();
    return Dyadic::pow2(-*j);
}

/// phi: Omega -> two-sided configurations; x_0 extends to a constant left
/// tail, positions >= 1 copy the point. ell(phi(x)) = 0 by construction.
inline BiConfiguration phi_embed(const OmegaPoint& x) {
    const Word& p = x.prefix();
    Word core;
    if (p.size() >= 1) core.assign(p.begin() + 1, p.end());
    Word tail = x.tail().period();
    if (p.empty()) {
        // Pure periodic point: tail must start at position 1, which is
        // tail index 1 of the original alignment.
        tail = x.tail().rotated_left().period();
    }
    return BiConfiguration::from_parts(x.alphabet(), {x.value_at(0)}, std::move(core), 1,
                                       std::move(tail));
}

/// psi: reads a configuration from its last constant-prefix coordinate,
/// psi(x) = phi^{-1}(sigma^{ell(x)} x). Left inverse of phi; invariant under
/// sigma^m on the argument.
inline OmegaPoint psi_collapse(const BiConfiguration& x) {
    long long from = x.ell();  // throws on constant / non-constant-left input
    Word prefix = x.window(from, x.core_end());
    return OmegaPoint::from_parts(x.alphabet(), std::move(prefix), x.right_tail().period());
}

/// The fixed target point o = 0 1 1 1 ... of Omega^0.
inline OmegaPoint omega_target(int alphabet) {
    return OmegaPoint::from_parts(alphabet, {0}, {1});
}

///// r(x) for x in Omega^0: least m >= 0 with x_{m+1} != 1; nullopt encodes
/// r = infinity (exactly the point o).
inline std::optional<long long> r_value(const OmegaPoint& x) {
    if (x.value_at(0) != 0)
        throw NotInOmegaZero("r_value needs a point of Omega^0, got " + x.to_literal());
    long long bound = (long long)x.prefix().size() + (long long)x.tail().length() + 1;
    for (long long j = 1; j <= bound; ++j)
        if (x.value_at(j) != 1) return j - 1;
    return std::nullopt;  // constant-1 tail beyond the prefix: x = o
}

///// Tail words used by the exhaustive Omega enumerations: every constant tail
/// plus the alternating (10)*. Reports must declare this set.
inline std::vector<Word> default_tail_set(int alphabet) {
    std::vector<Word> tails;
    for (int a = 0; a < alphabet; ++a) tails.push_back(Word{static_cast<Sym>(a)});
    tails.push_back(Word{1, 0});
    return tails;
}

/// All points of C_m = { x in Omega^0 : r(x) = m } reachable with a prefix of
/// length <= depth over the given tail set, deduplicated by canonical form,
/// in deterministic (sorted) order.
inline std::vector<OmegaPoint> enumerate_cm(int alphabet, long long m, int depth,
                                            const std::vector<Word>& tails) {
    std::set<OmegaPoint> seen;
    std::vector<Word> prefixes{Word{}};
    for (int len = 0; len <= depth; ++len) {
        std::vector<Word> next;
        for (const Word& p : prefixes) {
            for (const Word& t : tails) {
                if (p.empty() && t.size() == 1) continue;  // constant line, not in Omega
                // Cheap membership precheck before constructing.
                Sym v0 = p.empty() ? t[0] : p[0];
                Sym v1 = p.size() > 1 ? p[1]
                                      : (p.size() == 1 ? t[0] : t[1 % t.size()]);
                if (v0 != 0 || v0 == v1) continue;
                OmegaPoint x = OmegaPoint::from_parts(alphabet, p, t);
                if (r_value(x) == std::optional<long long>(m)) seen.insert(x);
            }
            if (len < depth)
                for (int a = 0; a < alphabet; ++a) {
                    Word q = p;
                    q.push_back(static_cast<Sym>(a));
                    next.push_back(std::move(q));
                }
        }
        prefixes = std::move(next);
    }
    return std::vector<OmegaPoint>(seen.begin(), seen.end());
}

inline std::vector<OmegaPoint> enumerate_cm(int alphabet, long long m, int depth) {
    return enumerate_cm(alphabet, m, depth, default_tail_set(alphabet));
}

///// A transversal: one point of Omega^a per symbol a.
class BarOmegaPoint {
public:
    explicit BarOmegaPoint(std::vector<OmegaPoint> coordinates)
        : coordinates_(std::move(coordinates)) {
        if (coordinates_.empty()) throw InvalidArgument("transversal needs one point per symbol");
        int n = coordinates_[0].alphabet();
        if ((int)coordinates_.size() != n)
            throw InvalidArgument("transversal has " + std::to_string(coordinates_.size()) +
                                  " coordinates for alphabet of size " + std::to_string(n));
        for (int a = 0; a < n; ++a) {
            if (coordinates_[static_cast<std::size_t>(a)].alphabet() != n)
                throw InvalidArgument("transversal coordinates disagree on the alphabet");
            if (coordinates_[static_cast<std::size_t>(a)].value_at(0) != a)
                throw NotInOmega("coordinate " + std::to_string(a) +
                                 " of a transversal must start with its symbol");
        }
    }

    int alphabet() const { return (int)coordinates_.size(); }
    const OmegaPoint& at(int a) const { return coordinates_[static_cast<std::size_t>(a)]; }
    const std::vector<OmegaPoint>& coordinates() const { return coordinates_; }

    friend bool operator==(const BarOmegaPoint& a, const BarOmegaPoint& b) {
        return a.coordinates_ == b.coordinates_;
    }
    friend bool operator!=(const BarOmegaPoint& a, const BarOmegaPoint& b) { return !(a == b); }

private:
    std::vector<OmegaPoint> coordinates_;
};

}  // namespace autshift
