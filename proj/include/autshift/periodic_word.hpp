#pragma once

// Periodic words in primitive (shortest-period) form. These are the tails of
// eventually periodic configurations; keeping them primitive is half of the
// canonical-form story for configuration equality.

#include <numeric>

#include "autshift/base.hpp"

namespace autshift {

/// Shortest period of w: the smallest divisor p of a prefix-shift match.
/// Classic border computation, adequate for the short tails used here.
inline std::size_t primitive_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return p;
    }
    return n;
}

/// A nonempty word stored with its shortest period ("0101" collapses to "01").
class PeriodicWord {
public:
    explicit PeriodicWord(Word period) {
        if (period.empty()) throw InvalidArgument("periodic word must be nonempty");
        std::size_t p = primitive_period(period);
        period.resize(p);
        period_ = std::move(period);
    }

    static PeriodicWord constant(Sym s) { return PeriodicWord(Word{s}); }

    const Word& period() const { return period_; }
    std::size_t length() const { return period_.size(); }

    /// Value at position i of the forward repetition w w w ... (i may be any
    /// integer; negative indices continue the same bi-infinite pattern).
    Sym at(long long i) const {
        return period_[static_cast<std::size_t>(floor_mod(i, (long long)period_.size()))];
    }

    /// Rotation moving the window start one step right: w[1..] + w[0].
    PeriodicWord rotated_left() const {
        Word w(period_.begin() + 1, period_.end());
        w.push_back(period_.front());
        return PeriodicWord(std::move(w));
    }

    /// Rotation moving the window start one step left: w.back + w[0..n-1).
    PeriodicWord rotated_right() const {
        Word w;
        w.reserve(period_.size());
        w.push_back(period_.back());
        w.insert(w.end(), period_.begin(), period_.end() - 1);
        return PeriodicWord(std::move(w));
    }

    friend bool operator==(const PeriodicWord& a, const PeriodicWord& b) {
        return a.period_ == b.period_;
    }
    friend bool operator!=(const PeriodicWord& a, const PeriodicWord& b) { return !(a == b); }

private:
    Word period_;
};

inline long long lcm_capped(long long a, long long b, long long cap = 1LL << 20) {
    long long g = std::gcd(a, b);
    long long l = a / g * b;
    if (l > cap) throw WindowTooLarge("tail period lcm exceeds comparison cap");
    return l;
}

}  // namespace autshift
