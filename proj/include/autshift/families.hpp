#pragma once

// The two scheme families driving the boundary experiments: the proximality
// involutions g_k (prepend k ones to the leading 1-run of points near the
// fixed target o = 0 1 1 1 ...) and the minimality elements g_k(x, y)
// (rewrite the depth-k prefix of x's coordinate points into y's).

#include <string>
#include <utility>
#include <vector>

#include "autshift/marker.hpp"
#include "autshift/omega.hpp"

namespace autshift {

/// Start-marker length used by the families: 2^k by default, but any length
/// sufficiently larger than k verifies; pass an explicit value to override.
inline long long default_marker_len(int k) {
    if (k < 0 || k > 22) throw WindowTooLarge("2^" + std::to_string(k) +
                                              " marker cells are past any sane budget");
    return 1LL << k;
}

inline Word constant_word(Sym s, long long count) {
    return Word(static_cast<std::size_t>(count), s);
}

/// Involution toward o over Omega^0: rules 0^L [0^k <-> 1^k] 1^y 0 for
/// 0 < y < k, plus 0^L [0^k <-> 1^k] 1^y b for 0 <= y < k and b not in
/// {0, 1}. On points with r < k it adds exactly k to the leading 1-run.
inline MarkerScheme build_proximal_scheme(int alphabet, int k, long long marker_len = 0) {
    check_alphabet_size(alphabet);
    if (k < 2) throw InvalidArgument("proximality family needs k >= 2");
    if (marker_len == 0) marker_len = default_marker_len(k);
    if (marker_len < 1) throw InvalidArgument("marker length must be positive");

    const Word zeros = constant_word(0, k);
    const Word ones = constant_word(1, k);
    std::vector<std::pair<Word, Word>> swap_map = {{zeros, ones}, {ones, zeros}};
    const Word start = constant_word(0, marker_len);

    std::vector<MarkerRule> rules;
    for (int y = 1; y < k; ++y) {
        Word end = constant_word(1, y);
        end.push_back(0);
        rules.push_back(make_rule(start, end, swap_map));
    }
    for (int b = 2; b < alphabet; ++b)
        for (int y = 0; y < k; ++y) {
            Word end = constant_word(1, y);
            end.push_back(static_cast<Sym>(b));
            rules.push_back(make_rule(start, end, swap_map));
        }
    return MarkerScheme(alphabet, std::move(rules),
                        "g_prox_k" + std::to_string(k));
}

/// Compiled proximality element targeting Omega^target; targets other than 0
/// are the 0<->target symbol-swap conjugates of the canonical element.
inline Code build_proximal_code(int alphabet, int k, Sym target = 0,
                                long long marker_len = 0) {
    MarkerScheme base = build_proximal_scheme(alphabet, k, marker_len);
    if (target == 0) return compile_scheme(base);
    if (int(target) >= alphabet) throw InvalidArgument("target symbol outside alphabet");
    MarkerScheme renamed = rename_scheme(base, swap_perm(alphabet, 0, target),
                                         base.label() + "_t" + std::to_string(int(target)));
    return compile_scheme(renamed);
}

/// Point with every symbol renamed through a permutation.
inline OmegaPoint rename_point(const OmegaPoint& x, const std::vector<Sym>& perm) {
    if ((int)perm.size() != x.alphabet())
        throw InvalidArgument("symbol permutation size must match the alphabet");
    Word prefix;
    for (Sym s : x.prefix()) prefix.push_back(perm[s]);
    Word tail;
    for (Sym s : x.tail().period()) tail.push_back(perm[s]);
    return OmegaPoint::from_parts(x.alphabet(), std::move(prefix), std::move(tail));
}

/// The fixed target of Omega^a: the 0<->a rename of o = 0 1 1 1 ....
inline OmegaPoint omega_target_of(int alphabet, Sym a) {
    if (a == 0) return omega_target(alphabet);
    return rename_point(omega_target(alphabet), swap_perm(alphabet, 0, a));
}

/// r of a point of Omega^a, measured through the 0<->a rename.
inline std::optional<long long> r_value_in(const OmegaPoint& x, Sym a) {
    if (a == 0) return r_value(x);
    return r_value(rename_point(x, swap_perm(x.alphabet(), 0, a)));
}

/// Minimality element g_k(x, y): for each symbol a whose depth-k prefixes
/// x^a_1..x^a_k and y^a_1..y^a_k differ, one rule
///   a^L [a^k <-> y^a_1..y^a_k] a x^a_1..x^a_k.
/// Acting on x^a it rewrites the prefix to y's: [g(x^a)]_{0..k} = y^a_{0..k}.
inline MarkerScheme build_minimal_scheme(int k, const BarOmegaPoint& x,
                                         const BarOmegaPoint& y, long long marker_len = 0) {
    if (k < 1) throw InvalidArgument("minimality family needs k >= 1");
    if (x.alphabet() != y.alphabet())
        throw InvalidArgument("source and target transversals must share an alphabet");
    if (marker_len == 0) marker_len = default_marker_len(k);
    if (marker_len < 1) throw InvalidArgument("marker length must be positive");
    const int n = x.alphabet();

    std::vector<MarkerRule> rules;
    for (int a = 0; a < n; ++a) {
        const OmegaPoint& xa = x.at(static_cast<Sym>(a));
        const OmegaPoint& ya = y.at(static_cast<Sym>(a));
        if (xa.value_at(1) == a)
            throw PrefixDegenerate("source point of coordinate " + std::to_string(a) +
                                   " repeats its own symbol at depth 1");
        if (ya.value_at(1) == a)
            throw PrefixDegenerate("target point of coordinate " + std::to_string(a) +
                                   " repeats its own symbol at depth 1");
        Word x_prefix, y_prefix;
        for (int j = 1; j <= k; ++j) {
            x_prefix.push_back(xa.value_at(j));
            y_prefix.push_back(ya.value_at(j));
        }
        if (x_prefix == y_prefix) continue;  // coordinate already agrees to depth k

        Word marker = constant_word(static_cast<Sym>(a), marker_len);
        Word plain = constant_word(static_cast<Sym>(a), k);
        Word end;
        end.push_back(static_cast<Sym>(a));
        end.insert(end.end(), x_prefix.begin(), x_prefix.end());
        rules.push_back(make_rule(std::move(marker), std::move(end),
                                  {{plain, y_prefix}, {y_prefix, plain}}));
    }
    return MarkerScheme(n, std::move(rules), "g_min_k" + std::to_string(k));
}

}  // namespace autshift
