#pragma once

// Bi-infinite configurations over a finite alphabet, restricted to the
// eventually periodic ones: a periodic left tail, a finite core, a periodic
// right tail. Construction always normalizes to a canonical form, so value
// equality is plain field equality. All operations are exact.
//
// Canonical form:
//   * both tails are primitive (shortest period);
//   * the core cannot be shrunk: its first cell breaks the left-periodic
//     continuation and its last cell breaks the right-periodic one;
//   * with an empty core, the anchor sits at the first position where the
//     left-tail pattern fails (fully periodic configurations instead pin
//     anchor = 0 and store the same primitive word on both sides).
// These conditions determine the representation uniquely from the abstract
// sequence, which is what makes == trustworthy.

#include <string>
#include <utility>

#include "autshift/periodic_word.hpp"

namespace autshift {

class BiConfiguration {
public:
    /// Build (and canonicalize) from raw parts. `left` repeats leftward and
    /// ends just before `anchor`; `core` occupies [anchor, anchor+|core|);
    /// `right` repeats rightward from anchor+|core|.
    static BiConfiguration from_parts(int alphabet, Word left, Word core,
                                      long long anchor, Word right) {
        check_alphabet_size(alphabet);
        check_word_alphabet(left, alphabet, "left tail");
        check_word_alphabet(core, alphabet, "core");
        check_word_alphabet(right, alphabet, "right tail");
        BiConfiguration x(alphabet, PeriodicWord(std::move(left)), std::move(core), anchor,
                          PeriodicWord(std::move(right)));
        x.normalize_in_place();
        return x;
    }

    static BiConfiguration constant(int alphabet, Sym s) {
        return from_parts(alphabet, {s}, {}, 0, {s});
    }

    int alphabet() const { return alphabet_; }
    const PeriodicWord& left_tail() const { return left_; }
    const PeriodicWord& right_tail() const { return right_; }
    const Word& core() const { return core_; }
    long long anchor() const { return anchor_; }
    long long core_end() const { return anchor_ + (long long)core_.size(); }

    Sym value_at(long long m) const {
        if (m < anchor_) return left_.at(m - anchor_);
        if (m < core_end()) return core_[static_cast<std::size_t>(m - anchor_)];
        return right_.at(m - core_end());
    }

    /// Contiguous values on [from, to).
    Word window(long long from, long long to) const {
        Word w;
        w.reserve(static_cast<std::size_t>(to > from ? to - from : 0));
        for (long long m = from; m < to; ++m) w.push_back(value_at(m));
        return w;
    }

    bool fully_periodic() const { return core_.empty() && left_ == right_; }

    bool is_constant() const { return fully_periodic() && left_.length() == 1; }

    /// sigma^t: the result at position m equals this configuration at m + t.
    BiConfiguration shifted(long long t) const {
        if (fully_periodic()) {
            long long p = (long long)left_.length();
            Word w;
            w.reserve(left_.length());
            for (long long i = 0; i < p; ++i) w.push_back(left_.at(i + t));
            BiConfiguration out(alphabet_, PeriodicWord(w), {}, 0, PeriodicWord(w));
            return out;  // already canonical: primitive word pinned at 0
        }
        BiConfiguration out = *this;
        out.anchor_ -= t;
        return out;  // canonical conditions do not involve the anchor value
    }

    /// Least m with x_m != x_{m+1}. Requires a constant left tail and a
    /// non-constant configuration; in canonical form this is anchor - 1.
    long long ell() const {
        if (is_constant()) throw ConstantConfiguration("ell undefined on a constant configuration");
        if (left_.length() != 1)
            throw NotEventuallyConstantLeft("ell requires a constant left tail, period is " +
                                            std::to_string(left_.length()));
        return anchor_ - 1;
    }

    friend bool operator==(const BiConfiguration& a, const BiConfiguration& b) {
        return a.alphabet_ == b.alphabet_ && a.anchor_ == b.anchor_ && a.core_ == b.core_ &&
               a.left_ == b.left_ && a.right_ == b.right_;
    }
    friend bool operator!=(const BiConfiguration& a, const BiConfiguration& b) {
        return !(a == b);
    }

    /// Stable text key, also the round-trippable literal:
    ///   (left)* "core" @anchor (right)*
    std::string to_literal() const {
        std::string out = "(" + word_to_string(left_.period()) + ")* \"" +
                          word_to_string(core_) + "\" @" + std::to_string(anchor_) + " (" +
                          word_to_string(right_.period()) + ")*";
        return out;
    }

private:
    BiConfiguration(int alphabet, PeriodicWord left, Word core, long long anchor,
                    PeriodicWord right)
        : alphabet_(alphabet), left_(std::move(left)), core_(std::move(core)),
          anchor_(anchor), right_(std::move(right)) {}

    void normalize_in_place() {
        // Absorb core cells into the tails while they continue the pattern.
        std::size_t begin = 0, end = core_.size();
        while (begin < end && core_[end - 1] == right_.at(-1)) {
            --end;
            right_ = right_.rotated_right();
        }
        while (begin < end && core_[begin] == left_.at(0)) {
            ++begin;
            ++anchor_;
            left_ = left_.rotated_left();
        }
        core_ = Word(core_.begin() + (long long)begin, core_.begin() + (long long)end);
        if (!core_.empty()) return;

        // Empty core: either the whole line is periodic, or the boundary
        // slides right until the left pattern first fails.
        long long period = lcm_capped((long long)left_.length(), (long long)right_.length());
        bool periodic = true;
        for (long long j = 0; j < period && periodic; ++j)
            periodic = (left_.at(j) == right_.at(j));
        if (periodic) {
            // Read absolute positions 0..period: pins the phase at 0.
            Word w;
            w.reserve(static_cast<std::size_t>(period));
            for (long long j = 0; j < period; ++j) w.push_back(right_.at(j - anchor_));
            PeriodicWord p(std::move(w));
            left_ = p;
            right_ = p;
            anchor_ = 0;
            return;
        }
        while (left_.at(0) == right_.at(0)) {
            ++anchor_;
            left_ = left_.rotated_left();
            right_ = right_.rotated_left();
        }
    }

    int alphabet_;
    PeriodicWord left_;
    Word core_;
    long long anchor_;
    PeriodicWord right_;
};

}  // namespace autshift
