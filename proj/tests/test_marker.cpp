// Marker rewriting schemes: rule validation, overlap verification with
// concrete witnesses, compilation to sliding block codes, and the scheme
// algebra (inverse, involution, rename).

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <autshift/dsl.hpp>
#include <autshift/families.hpp>
#include <autshift/marker.hpp>

using namespace autshift;

namespace {

Word w(const std::string& text) { return word_from_string(text); }

MarkerScheme hedlund_scheme() {
    return MarkerScheme(4, {make_rule(w("000"), w("111"), {{w("2332"), w("3223")},
                                                           {w("3223"), w("2332")}})},
                        "marker_swap_4");
}

MarkerScheme overlapping_scheme() {
    return MarkerScheme(2, {make_rule(w("0"), w("0"), {{w("01"), w("10")},
                                                       {w("10"), w("01")}})},
                        "overlapping");
}

MarkerScheme mini_swap_scheme() {
    return MarkerScheme(2, {make_rule(w("00"), w("11"), {{w("01"), w("10")},
                                                         {w("10"), w("01")}})},
                        "mini_swap");
}

/// Three-cycle on the data set: a valid scheme that is not an involution.
MarkerScheme cycle3_scheme() {
    return MarkerScheme(4, {make_rule(w("000"), w("111"), {{w("2332"), w("3223")},
                                                           {w("3223"), w("2222")},
                                                           {w("2222"), w("2332")}})},
                        "marker_cycle3");
}

/// Does `rule` match inside `word` with its pattern starting at `pos`?
bool match_at(const MarkerRule& rule, const Word& word, long long pos) {
    if (pos < 0 || pos + (long long)rule.width() > (long long)word.size()) return false;
    for (std::size_t c = 0; c < rule.start.size(); ++c)
        if (word[(std::size_t)pos + c] != rule.start[c]) return false;
    Word d(word.begin() + pos + (long long)rule.start.size(),
           word.begin() + pos + (long long)(rule.start.size() + rule.data_len()));
    if (!std::binary_search(rule.data.begin(), rule.data.end(), d)) return false;
    std::size_t e0 = (std::size_t)pos + rule.start.size() + rule.data_len();
    for (std::size_t c = 0; c < rule.end.size(); ++c)
        if (word[e0 + c] != rule.end[c]) return false;
    return true;
}

}  // namespace

TEST_CASE("make_rule validates markers and the data bijection") {
    CHECK_THROWS_AS(make_rule({}, w("1"), {{w("0"), w("0")}}), InvalidArgument);
    CHECK_THROWS_AS(make_rule(w("0"), {}, {{w("1"), w("1")}}), InvalidArgument);
    CHECK_THROWS_AS(make_rule(w("0"), w("1"), {}), InvalidArgument);
    CHECK_THROWS_AS(make_rule(w("0"), w("1"), {{w("01"), w("1")}}), InvalidArgument);
    CHECK_THROWS_AS(make_rule(w("0"), w("1"), {{w("01"), w("11")}}), InvalidArgument);
    CHECK_THROWS_AS(make_rule(w("0"), w("1"), {{w("01"), w("10")}, {w("01"), w("01")}}),
                    InvalidArgument);
    CHECK_THROWS_AS(make_rule(w("0"), w("1"), {{w("01"), w("10")}, {w("10"), w("10")}}),
                    InvalidArgument);

    auto rule = make_rule(w("00"), w("11"), {{w("10"), w("01")}, {w("01"), w("10")}});
    CHECK(rule.data == std::vector<Word>{w("01"), w("10")});  // sorted
    CHECK(rule.perm == std::vector<std::size_t>{1, 0});
    CHECK(rule.width() == 6);
    CHECK(rule.pattern(0) == w("000111"));
    CHECK(rule.pattern(1) == w("001011"));
}

TEST_CASE("scheme construction checks alphabets") {
    CHECK_THROWS_AS(MarkerScheme(2, {make_rule(w("2"), w("1"), {{w("0"), w("0")}})}, "bad"),
                    InvalidArgument);
    CHECK_THROWS_AS(MarkerScheme(1, {}, "tiny"), InvalidArgument);
    CHECK(MarkerScheme(2, {}, "empty").rules().empty());
}

TEST_CASE("the four-letter marker swap verifies and rewrites one block") {
    auto s = hedlund_scheme();
    auto verdict = verify_scheme(s);
    CHECK(verdict.ok);
    CHECK(verdict.violations.empty());

    auto g = compile_scheme(s);
    CHECK(g.support_min() == -6);
    CHECK(g.support_max() == 6);
    CHECK(g.support().size() == 13);

    auto x = BiConfiguration::from_parts(4, {0}, w("2332"), 1, {1});
    auto y = apply_code(g, x);
    CHECK(y == BiConfiguration::from_parts(4, {0}, w("3223"), 1, {1}));
    CHECK(y.to_literal() == "(0)* \"3223\" @1 (1)*");
    // Involution: applying again restores the original.
    CHECK(apply_code(g, y) == x);
    // A block with no end marker present is left alone.
    auto plain = BiConfiguration::from_parts(4, {0}, w("2332"), 1, {0});
    CHECK(apply_code(g, plain) == plain);
}

TEST_CASE("overlapping data cells are rejected with the joint window") {
    auto s = overlapping_scheme();
    auto verdict = verify_scheme(s);
    REQUIRE_FALSE(verdict.ok);
    REQUIRE_FALSE(verdict.violations.empty());

    // The scan walks offsets left to right, so a marker landing inside the
    // shifted data window is reported before the pure data/data clash.
    const auto& first = verdict.violations.front();
    CHECK(first.rule_i == 0);
    CHECK(first.rule_j == 0);
    CHECK(first.offset == -2);
    CHECK(first.kind == OverlapViolation::Kind::DataMarker);
    CHECK(word_to_string(first.witness) == "010010");
    CHECK(first.witness_origin == -2);

    // The adjacent-shift data/data clash is also present, with the joint
    // window that carries both matches.
    auto dd = std::find_if(verdict.violations.begin(), verdict.violations.end(),
                           [](const OverlapViolation& v) {
                               return v.kind == OverlapViolation::Kind::DataData &&
                                      v.offset == -1;
                           });
    REQUIRE(dd != verdict.violations.end());
    CHECK(dd->rule_i == 0);
    CHECK(dd->rule_j == 0);
    CHECK(word_to_string(dd->witness) == "00100");
    CHECK(dd->witness_origin == -1);

    const auto& rule = s.rules()[0];
    CHECK(match_at(rule, dd->witness, -dd->witness_origin));
    CHECK(match_at(rule, dd->witness, -dd->witness_origin + dd->offset));

    CHECK_THROWS_AS(compile_scheme(s), UnverifiedScheme);
}

TEST_CASE("the two-letter mini swap rewrites every disjoint match") {
    auto s = mini_swap_scheme();
    REQUIRE(verify_scheme(s).ok);
    auto g = compile_scheme(s);
    CHECK(g.support_min() == -3);
    CHECK(g.support_max() == 3);

    auto x = BiConfiguration::from_parts(2, {0}, w("001011"), 0, {1});
    auto y = apply_code(g, x);
    CHECK(y == BiConfiguration::from_parts(2, {0}, {}, 3, {1}));
    CHECK(y.to_literal() == "(0)* \"\" @3 (1)*");

    auto two = BiConfiguration::from_parts(2, {0}, w("001011001011"), 0, {1});
    CHECK(apply_code(g, two) ==
          BiConfiguration::from_parts(2, {0}, w("000111000111"), 0, {1}));

    auto matches = matches_in_range(s, two, -8, 20);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0] == std::pair<std::size_t, long long>{0, 0});
    CHECK(matches[1] == std::pair<std::size_t, long long>{0, 6});
}

TEST_CASE("rewriting preserves the match set cell for cell") {
    auto s = mini_swap_scheme();
    auto g = compile_scheme(s);
    std::mt19937_64 rng(20250813);
    for (int trial = 0; trial < 40; ++trial) {
        Word core;
        for (int i = 0; i < 14; ++i) core.push_back(static_cast<Sym>(rng() % 2));
        auto x = BiConfiguration::from_parts(2, {0}, core, 0, {1});
        auto y = apply_code(g, x);
        CHECK(matches_in_range(s, x, -10, 24) == matches_in_range(s, y, -10, 24));
        // Involution on the nose.
        CHECK(apply_code(g, y) == x);
    }
}

TEST_CASE("empty schemes compile to the identity") {
    auto g = compile_scheme(MarkerScheme(3, {}, "empty"));
    CHECK(equal_codes(g, identity_code(3)));
}

TEST_CASE("inverse schemes invert the rewrite exactly") {
    auto s = cycle3_scheme();
    REQUIRE(verify_scheme(s).ok);
    CHECK_FALSE(is_involution(s));

    auto s_inv = invert_scheme(s);
    CHECK_FALSE(s == s_inv);
    CHECK(invert_scheme(s_inv) == s);

    auto g = compile_scheme(s);
    auto g_inv = compile_scheme(s_inv);
    // Exact inverse on eventually periodic configurations.
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        Word core;
        for (int i = 0; i < 16; ++i) core.push_back(static_cast<Sym>(rng() % 4));
        auto x = BiConfiguration::from_parts(4, {0}, core, -4, {1});
        CHECK(apply_code(g_inv, apply_code(g, x)) == x);
        CHECK(apply_code(g, apply_code(g_inv, x)) == x);
    }
    // The three-cycle needs three applications to close.
    auto x = BiConfiguration::from_parts(4, {0}, w("2332"), 1, {1});
    auto once = apply_code(g, x);
    CHECK(once == BiConfiguration::from_parts(4, {0}, w("3223"), 1, {1}));
    auto twice = apply_code(g, once);
    CHECK(twice == BiConfiguration::from_parts(4, {0}, w("2222"), 1, {1}));
    CHECK(apply_code(g, twice) == x);

    // Involutions are their own inverse; == ignores labels.
    CHECK(invert_scheme(hedlund_scheme()) == hedlund_scheme());
    CHECK(is_involution(hedlund_scheme()));
    CHECK(is_involution(build_proximal_scheme(2, 3)));
}

TEST_CASE("renaming a scheme compiles to the symbol-permutation conjugate") {
    auto base = build_proximal_scheme(3, 2);
    auto perm = swap_perm(3, 0, 2);
    auto renamed = rename_scheme(base, perm, "renamed");
    REQUIRE(verify_scheme(renamed).ok);

    auto p = symbol_perm_code(perm, "swap02");
    CHECK(equal_codes(compile_scheme(renamed),
                      conjugate(compile_scheme(base), p, p)));

    // Renaming by the identity changes nothing (labels are ignored by ==).
    std::vector<Sym> id_perm{0, 1, 2};
    CHECK(rename_scheme(base, id_perm, "same") == base);
    CHECK_THROWS_AS(rename_scheme(base, {0, 1}, "short"), InvalidArgument);
}

TEST_CASE("verification verdicts are sound on randomized small schemes") {
    std::mt19937_64 rng(0xabcdef);
    auto random_word = [&](std::size_t len) {
        Word out;
        for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<Sym>(rng() % 2));
        return out;
    };
    int accepted = 0, rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Word start = random_word(1 + rng() % 2);
        Word end = random_word(1 + rng() % 2);
        std::size_t dlen = 1 + rng() % 2;
        Word d1 = random_word(dlen), d2 = random_word(dlen);
        if (d1 == d2) continue;
        MarkerScheme s(2, {make_rule(start, end, {{d1, d2}, {d2, d1}})}, "random");
        auto verdict = verify_scheme(s);

        if (!verdict.ok) {
            ++rejected;
            // Soundness of rejection: every reported witness really admits
            // both matches at the claimed offset.
            for (const auto& v : verdict.violations) {
                const auto& ri = s.rules()[v.rule_i];
                const auto& rj = s.rules()[v.rule_j];
                CHECK(match_at(ri, v.witness, -v.witness_origin));
                CHECK(match_at(rj, v.witness, -v.witness_origin + v.offset));
                CHECK_FALSE(v.offset == 0);
            }
            continue;
        }

        ++accepted;
        // Soundness of acceptance: the compiled code is an involution on all
        // cyclic configurations wide enough to cover its window, and the
        // match set is preserved on random configurations.
        auto g = compile_scheme(s);
        int period = (int)(g.support().size()) + 3;
        CHECK_FALSE(cyclic_involution_counterexample(g, period).has_value());
        for (int probe = 0; probe < 5; ++probe) {
            auto x = BiConfiguration::from_parts(2, {0}, random_word(12), 0, {1});
            CHECK(matches_in_range(s, x, -10, 22) ==
                  matches_in_range(s, apply_code(g, x), -10, 22));
        }
    }
    // The generator must exercise both verdicts.
    CHECK(accepted > 20);
    CHECK(rejected > 20);
}

TEST_CASE("verification is deterministic") {
    auto v1 = verify_scheme(overlapping_scheme());
    auto v2 = verify_scheme(overlapping_scheme());
    REQUIRE(v1.violations.size() == v2.violations.size());
    for (std::size_t i = 0; i < v1.violations.size(); ++i) {
        CHECK(v1.violations[i].witness == v2.violations[i].witness);
        CHECK(v1.violations[i].offset == v2.violations[i].offset);
    }
}
