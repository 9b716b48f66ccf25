#pragma once

// Shared ground types for the autshift library: symbols, words, alphabets,
// error taxonomy and enumeration budgets. Everything downstream treats these
// as immutable values.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace autshift {

using Sym = std::uint8_t;
using Word = std::vector<Sym>;

/// Largest alphabet renderable by the text formats (digits then lowercase).
inline constexpr int kMaxPrintableAlphabet = 36;

/// Base error for all library failures; carries a stable machine code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define AUTSHIFT_DEFINE_ERROR(NAME, CODE)                                 \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& message) : Error(CODE, message) {} \
    }

AUTSHIFT_DEFINE_ERROR(InvalidArgument, "invalid_argument");
AUTSHIFT_DEFINE_ERROR(NotEventuallyConstantLeft, "not_eventually_constant_left");
AUTSHIFT_DEFINE_ERROR(ConstantConfiguration, "constant_configuration");
AUTSHIFT_DEFINE_ERROR(NotInOmega, "not_in_omega");
AUTSHIFT_DEFINE_ERROR(NotInOmegaZero, "not_in_omega_zero");
AUTSHIFT_DEFINE_ERROR(WindowTooLarge, "window_too_large");
AUTSHIFT_DEFINE_ERROR(UnverifiedScheme, "unverified_scheme");
AUTSHIFT_DEFINE_ERROR(ImageDegenerate, "image_degenerate");
AUTSHIFT_DEFINE_ERROR(PrefixDegenerate, "prefix_degenerate");
AUTSHIFT_DEFINE_ERROR(CollisionConstraint, "collision_constraint");
AUTSHIFT_DEFINE_ERROR(InjectivityRadiusInsufficient, "injectivity_radius_insufficient");
AUTSHIFT_DEFINE_ERROR(SearchExhausted, "search_exhausted");

#undef AUTSHIFT_DEFINE_ERROR

/// Caps for the exhaustive procedures. Operations throw WindowTooLarge
/// instead of silently sampling when an exact sweep would exceed the cap.
struct Budget {
    long long max_enumeration = 1LL << 27;  ///< exact-equality assignment sweeps
    long long max_table = 1LL << 24;        ///< rule tabulation entries
};

/// |A|^count with an overflow cap; nullopt means "past any sane budget".
inline std::optional<long long> checked_pow(int base, std::size_t count,
                                            long long cap = 1LL << 62) {
    long long value = 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (value > cap / base) return std::nullopt;
        value *= base;
    }
    return value;
}

/// Symbols render as 0-9 then a-z; alphabets above 36 are representable in
/// memory but not by the text formats.
inline char symbol_to_char(Sym s) {
    if (s < 10) return static_cast<char>('0' + s);
    if (s < kMaxPrintableAlphabet) return static_cast<char>('a' + (s - 10));
    throw InvalidArgument("symbol " + std::to_string(int(s)) + " is not printable");
}

inline std::optional<Sym> char_to_symbol(char c) {
    if (c >= '0' && c <= '9') return static_cast<Sym>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Sym>(c - 'a' + 10);
    return std::nullopt;
}

inline std::string word_to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Sym s : w) out.push_back(symbol_to_char(s));
    return out;
}

/// Plain literal -> word ("0110"); the DSL layer adds run-length sugar.
inline Word word_from_string(const std::string& text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        auto s = char_to_symbol(c);
        if (!s) throw InvalidArgument(std::string("bad symbol character '") + c + "'");
        w.push_back(*s);
    }
    return w;
}

inline void check_word_alphabet(const Word& w, int alphabet, const char* what) {
    for (Sym s : w)
        if (int(s) >= alphabet)
            throw InvalidArgument(std::string(what) + ": symbol " + std::to_string(int(s)) +
                                  " outside alphabet of size " + std::to_string(alphabet));
}

inline void check_alphabet_size(int alphabet) {
    if (alphabet < 2)
        throw InvalidArgument("alphabet must have at least two symbols, got " +
                              std::to_string(alphabet));
}

inline long long floor_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace autshift
