// The boundary space Omega: canonical forms, the exact ultrametric, the
// embedding phi / collapse psi, the depth statistic r, and the exhaustive
// C_m enumeration.

#include <catch2/catch_amalgamated.hpp>

#include <autshift/families.hpp>
#include <autshift/omega.hpp>

using namespace autshift;

namespace {
OmegaPoint pt(int alphabet, const std::string& prefix, const std::string& tail) {
    return OmegaPoint::from_parts(alphabet, word_from_string(prefix), word_from_string(tail));
}
}  // namespace

TEST_CASE("omega points canonicalize the prefix against the tail") {
    CHECK(pt(2, "011", "1") == pt(2, "0", "1"));
    CHECK(pt(2, "011", "1").to_literal() == "\"0\" (1)*");

    auto x = pt(2, "0110", "10");
    CHECK(x.prefix() == word_from_string("01"));
    CHECK(x.tail().period() == word_from_string("10"));
    CHECK(x.to_literal() == "\"01\" (10)*");

    // A prefix that unwinds completely leaves a pure periodic point.
    auto alt = pt(2, "010", "10");
    CHECK(alt.prefix().empty());
    CHECK(alt.to_literal() == "\"\" (01)*");
    for (long long j = 0; j < 8; ++j) CHECK(alt.value_at(j) == (j % 2 == 0 ? 0 : 1));
}

TEST_CASE("omega membership needs x_0 != x_1") {
    CHECK_THROWS_AS(pt(2, "00", "1"), NotInOmega);
    CHECK_THROWS_AS(pt(2, "", "1"), NotInOmega);   // constant line
    CHECK_THROWS_AS(pt(2, "1", "1"), NotInOmega);  // normalizes to constant
    CHECK_NOTHROW(pt(2, "10", "0"));
    CHECK_THROWS_AS(OmegaPoint::from_parts(2, {0}, {2}), InvalidArgument);
}

TEST_CASE("first disagreement and the exact ultrametric") {
    auto a = pt(2, "01", "0");   // 0 1 0 0 0 ...
    auto b = pt(2, "010", "1");  // 0 1 0 1 1 ...
    CHECK(first_disagreement(a, b) == 3);
    CHECK(omega_distance(a, b) == Dyadic::pow2(-3));
    CHECK(omega_distance(a, a) == Dyadic::zero());
    CHECK(omega_distance(a, b) == omega_distance(b, a));

    // Points with distinct periods but equal sequences compare equal.
    auto c = pt(2, "01", "00");
    CHECK_FALSE(first_disagreement(a, c).has_value());
    CHECK(a == c);

    // Ultrametric triangle: d(a,c) <= max(d(a,b), d(b,c)).
    auto e = pt(2, "011", "0");
    CHECK(omega_distance(a, e) <= max(omega_distance(a, b), omega_distance(b, e)));
}

TEST_CASE("the target point o and the depth statistic r") {
    auto o = omega_target(2);
    CHECK(o.to_literal() == "\"0\" (1)*");
    CHECK_FALSE(r_value(o).has_value());  // r(o) = infinity

    CHECK(r_value(pt(2, "010", "1")) == 1);
    CHECK(r_value(pt(2, "01", "0")) == 1);
    CHECK(r_value(pt(2, "0110", "1")) == 2);
    CHECK(r_value(pt(2, "01", "10")) == 2);
    CHECK(r_value(pt(3, "02", "1")) == 0);
    CHECK(r_value(pt(2, "0111110", "1")) == 5);

    CHECK_THROWS_AS(r_value(pt(2, "10", "0")), NotInOmegaZero);
}

TEST_CASE("r in a renamed copy of Omega^a") {
    auto x1 = pt(2, "101", "0");  // the 0<->1 rename of 0 1 0 (1)*... r = 1
    CHECK(r_value_in(x1, 1) == 1);
    CHECK(r_value_in(pt(2, "01", "0"), 0) == 1);
    CHECK(omega_target_of(2, 1).to_literal() == "\"1\" (0)*");
    CHECK(omega_target_of(3, 2).to_literal() == "\"2\" (1)*");
    CHECK(omega_target_of(3, 1).to_literal() == "\"1\" (0)*");
}

TEST_CASE("phi embeds with a constant left tail and psi collapses back") {
    auto o = omega_target(2);
    auto e = phi_embed(o);
    CHECK(e.to_literal() == "(0)* \"\" @1 (1)*");
    CHECK(e.ell() == 0);
    CHECK(psi_collapse(e) == o);

    std::vector<OmegaPoint> samples = {
        o, pt(2, "01", "0"), pt(2, "0100", "1"), pt(2, "010", "10"),
        pt(4, "02332", "1"), pt(3, "0", "21"),
    };
    for (const auto& x : samples) {
        auto y = phi_embed(x);
        CHECK(y.ell() == 0);
        for (long long j = 0; j < 12; ++j) CHECK(y.value_at(j) == x.value_at(j));
        CHECK(y.value_at(-1) == x.value_at(0));
        CHECK(y.value_at(-7) == x.value_at(0));
        CHECK(psi_collapse(y) == x);
        // psi is shift-invariant on the embedded orbit.
        CHECK(psi_collapse(y.shifted(5)) == x);
        CHECK(psi_collapse(y.shifted(-3)) == x);
    }
}

TEST_CASE("psi reads off the core of an explicit configuration") {
    auto x = BiConfiguration::from_parts(4, {0}, word_from_string("2332"), 1, {1});
    auto p = psi_collapse(x);
    CHECK(p.to_literal() == "\"02332\" (1)*");

    CHECK_THROWS_AS(psi_collapse(BiConfiguration::constant(2, 0)), ConstantConfiguration);
    auto striped = BiConfiguration::from_parts(2, {1, 0}, {1, 1}, 0, {0});
    CHECK_THROWS_AS(psi_collapse(striped), NotEventuallyConstantLeft);
}

TEST_CASE("the default tail set is every constant plus the alternation") {
    auto tails = default_tail_set(3);
    REQUIRE(tails.size() == 4);
    CHECK(tails[0] == Word{0});
    CHECK(tails[1] == Word{1});
    CHECK(tails[2] == Word{2});
    CHECK(tails[3] == Word{1, 0});
}

TEST_CASE("enumerate_cm lists exactly the depth-reachable points of C_m") {
    auto c1 = enumerate_cm(2, 1, 4);
    CHECK(c1.size() == 7);
    for (const auto& x : c1) CHECK(r_value(x) == 1);
    // Sorted and duplicate-free under the canonical order.
    for (std::size_t i = 1; i < c1.size(); ++i) {
        CHECK(c1[i - 1] < c1[i]);
    }
    // Spot-check membership of four known points.
    auto member = [&](const OmegaPoint& x) {
        for (const auto& y : c1)
            if (y == x) return true;
        return false;
    };
    CHECK(member(pt(2, "01", "0")));
    CHECK(member(pt(2, "010", "1")));
    CHECK(member(pt(2, "0100", "1")));
    CHECK(member(pt(2, "010", "10")));

    // r = 0 points start 0 then a non-1 symbol: over A = {0,1} only 00... is
    // excluded by Omega membership, so C_0 at depth 0 is empty but over
    // A = {0,1,2} the symbol 2 opens it up.
    auto c0 = enumerate_cm(3, 0, 1);
    CHECK_FALSE(c0.empty());
    for (const auto& x : c0) {
        CHECK(r_value(x) == 0);
        CHECK(x.value_at(0) == 0);
        CHECK(x.value_at(1) != 1);
    }

    // Deeper enumerations contain the shallow ones.
    auto shallow = enumerate_cm(2, 2, 3);
    auto deep = enumerate_cm(2, 2, 5);
    CHECK(shallow.size() < deep.size());
    for (const auto& x : shallow) {
        bool found = false;
        for (const auto& y : deep) found = found || y == x;
        CHECK(found);
    }
}

TEST_CASE("transversals hold one coordinate per symbol") {
    auto bar = BarOmegaPoint({pt(2, "01", "0"), pt(2, "10", "1")});
    CHECK(bar.alphabet() == 2);
    CHECK(bar.at(0).value_at(0) == 0);
    CHECK(bar.at(1).value_at(0) == 1);

    CHECK_THROWS_AS(BarOmegaPoint({pt(2, "01", "0")}), InvalidArgument);
    CHECK_THROWS_AS(BarOmegaPoint({pt(2, "01", "0"), pt(2, "01", "0")}), NotInOmega);
    CHECK_THROWS_AS(BarOmegaPoint(std::vector<OmegaPoint>{}), InvalidArgument);
}
