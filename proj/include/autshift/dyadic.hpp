#pragma once

// Exact dyadic magnitudes. Every distance on the boundary space is either 0
// or a power of two, so an (is_zero, exponent) pair represents all values
// exactly — no floating point anywhere in the metric layer.

#include <string>

#include "autshift/base.hpp"

namespace autshift {

/// Value 0 or 2^exponent (exponent may be any integer, typically <= 0).
class Dyadic {
public:
    constexpr Dyadic() : zero_(true), exponent_(0) {}

    static constexpr Dyadic zero() { return Dyadic(); }
    static constexpr Dyadic pow2(long long exponent) { return Dyadic(false, exponent); }

    constexpr bool is_zero() const { return zero_; }

    /// Exponent of a nonzero value; calling this on 0 is a logic error.
    long long exponent() const {
        if (zero_) throw InvalidArgument("Dyadic::exponent on zero value");
        return exponent_;
    }

    friend constexpr bool operator==(const Dyadic& a, const Dyadic& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.exponent_ == b.exponent_;
    }
    friend constexpr bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend constexpr bool operator<(const Dyadic& a, const Dyadic& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.exponent_ < b.exponent_;
    }
    friend constexpr bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }
    friend constexpr bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend constexpr bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

    std::string to_string() const {
        if (zero_) return "0";
        if (exponent_ == 0) return "1";
        return "2^" + std::to_string(exponent_);
    }

private:
    constexpr Dyadic(bool zero, long long exponent) : zero_(zero), exponent_(exponent) {}
    bool zero_;
    long long exponent_;
};

inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace autshift
