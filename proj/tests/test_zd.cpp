// Multi-dimensional sliding block codes: construction, composition,
// tabulation, measured memory radius, shift detection, the coset conjugation
// into one dimension, lift uniqueness, and the full translation decision.

#include <catch2/catch_amalgamated.hpp>

#include <autshift/base.hpp>
#include <autshift/block_code.hpp>
#include <autshift/lattice.hpp>
#include <autshift/zd_code.hpp>

#include <string>

using namespace autshift;

namespace {

// Evaluate a code on an explicit assignment of its ball, given as
// (point, symbol) pairs over a zero background.
Sym eval_sparse(const SlidingBlockCodeZd& g,
                const std::vector<std::pair<ZVec, Sym>>& cells) {
    Word buf(g.ball_size(), 0);
    for (const auto& [p, s] : cells) buf[ball_index(p, g.radius())] = s;
    return g.eval(buf.data());
}

// Exhaustive agreement over every pattern on the (shared) ball.
bool agree_on_all_patterns(const SlidingBlockCodeZd& a, const SlidingBlockCodeZd& b) {
    REQUIRE(a.alphabet() == b.alphabet());
    REQUIRE(a.dimension() == b.dimension());
    REQUIRE(a.radius() == b.radius());
    Word buf(a.ball_size(), 0);
    do {
        if (a.eval(buf.data()) != b.eval(buf.data())) return false;
    } while (detail::odometer_next(buf, a.alphabet()));
    return true;
}

}  // namespace

TEST_CASE("constructors validate and expose their parameters") {
    SlidingBlockCodeZd id = identity_zd(2, 2);
    CHECK(id.alphabet() == 2);
    CHECK(id.dimension() == 2);
    CHECK(id.radius() == 0);
    CHECK(id.ball_size() == 1);
    CHECK(id.label() == "id");
    Word one{1};
    CHECK(id.eval(one.data()) == 1);

    CHECK_THROWS_AS(identity_zd(1, 2), InvalidArgument);
    CHECK_THROWS_AS(SlidingBlockCodeZd(2, 0, 1, [](const Sym* v) { return v[0]; }, "bad"),
                    InvalidArgument);
    CHECK_THROWS_AS(SlidingBlockCodeZd(2, 2, -1, [](const Sym* v) { return v[0]; }, "bad"),
                    InvalidArgument);
}

TEST_CASE("shift_zd reads the translated cell") {
    SlidingBlockCodeZd s = shift_zd(2, 2, ZVec{1, -1});
    CHECK(s.radius() == 1);
    CHECK(s.label() == "sigma_(1,-1)");
    CHECK(eval_sparse(s, {{ZVec{1, -1}, 1}}) == 1);
    CHECK(eval_sparse(s, {{ZVec{0, 0}, 1}}) == 0);

    SlidingBlockCodeZd origin = shift_zd(2, 2, ZVec{0, 0});
    CHECK(origin.radius() == 0);
    CHECK(origin.label() == "sigma_(0,0)");

    CHECK_THROWS_AS(shift_zd(2, 2, ZVec{1}), InvalidArgument);
}

TEST_CASE("cross swap toggles 1 and 2 exactly when the axis neighbours are 0") {
    SlidingBlockCodeZd g = build_cross_swap(3, 2);
    CHECK(g.radius() == 1);
    CHECK(g.label() == "cross_swap");
    CHECK_THROWS_AS(build_cross_swap(2, 2), InvalidArgument);

    CHECK(eval_sparse(g, {{ZVec{0, 0}, 1}}) == 2);
    CHECK(eval_sparse(g, {{ZVec{0, 0}, 2}}) == 1);
    CHECK(eval_sparse(g, {}) == 0);
    // A nonzero axis neighbour blocks the swap.
    CHECK(eval_sparse(g, {{ZVec{0, 0}, 1}, {ZVec{0, 1}, 1}}) == 1);
    CHECK(eval_sparse(g, {{ZVec{0, 0}, 1}, {ZVec{-1, 0}, 2}}) == 1);
    // Corners are not consulted.
    CHECK(eval_sparse(g, {{ZVec{0, 0}, 1}, {ZVec{1, 1}, 2}, {ZVec{-1, -1}, 1}}) == 2);

    // Involution: the composed code returns the original centre symbol on a
    // sparse probe set covering every local situation (the full radius-2
    // sweep would be 3^25 patterns).
    SlidingBlockCodeZd gg = compose_zd(g, g);
    for (Sym c : {Sym(0), Sym(1), Sym(2)}) {
        CHECK(eval_sparse(gg, {{ZVec{0, 0}, c}}) == c);
        CHECK(eval_sparse(gg, {{ZVec{0, 0}, c}, {ZVec{0, 1}, 1}}) == c);
        CHECK(eval_sparse(gg, {{ZVec{0, 0}, c}, {ZVec{1, 0}, 2}, {ZVec{0, -1}, 1}}) == c);
        CHECK(eval_sparse(gg, {{ZVec{0, 0}, c}, {ZVec{2, 0}, 1}}) == c);
        CHECK(eval_sparse(gg, {{ZVec{0, 0}, c}, {ZVec{1, 1}, 2}}) == c);
    }
    CHECK(eval_sparse(gg, {{ZVec{1, 0}, 1}}) == 0);
}

TEST_CASE("compose_zd adds radii and matches the sum of shifts") {
    SlidingBlockCodeZd a = shift_zd(5, 2, ZVec{1, 0});
    SlidingBlockCodeZd b = shift_zd(5, 2, ZVec{0, -1});
    SlidingBlockCodeZd ab = compose_zd(a, b);
    CHECK(ab.radius() == 2);
    CHECK(ab.label() == "sigma_(1,0)*sigma_(0,-1)");
    // (a after b)(x)_0 = (b x)_{(1,0)} = x_{(1,0)+(0,-1)}.
    CHECK(eval_sparse(ab, {{ZVec{1, -1}, 4}}) == 4);
    CHECK(eval_sparse(ab, {{ZVec{1, 0}, 3}}) == 0);
    CHECK(eval_sparse(ab, {{ZVec{0, -1}, 3}}) == 0);
    CHECK(agree_on_all_patterns(tabulate_zd(shift_zd(2, 1, ZVec{2})),
                                shift_zd(2, 1, ZVec{2})));

    // Composing with the identity changes nothing (radius stays put).
    SlidingBlockCodeZd g = build_cross_swap(3, 2);
    CHECK(agree_on_all_patterns(compose_zd(g, identity_zd(3, 2)), g));
    CHECK(agree_on_all_patterns(compose_zd(identity_zd(3, 2), g), g));
}

TEST_CASE("tabulate_zd reproduces the rule within budget") {
    SlidingBlockCodeZd g = build_cross_swap(3, 2);
    SlidingBlockCodeZd t = tabulate_zd(g);
    CHECK(t.label() == g.label());
    CHECK(t.radius() == g.radius());
    CHECK(agree_on_all_patterns(t, g));
    CHECK_THROWS_AS(tabulate_zd(g, Budget{1 << 20, 16}), WindowTooLarge);
}

TEST_CASE("memory_radius_zd measures the true dependence radius") {
    CHECK(memory_radius_zd(identity_zd(3, 2)) == 0);
    CHECK(memory_radius_zd(build_cross_swap(3, 2)) == 1);
    CHECK(memory_radius_zd(shift_zd(2, 2, ZVec{1, -1})) == 1);

    // Declared radius 2, actual dependence only on the cell at (1).
    std::size_t idx = ball_index(ZVec{1}, 2);
    SlidingBlockCodeZd padded(3, 1, 2,
                              [idx](const Sym* v) { return v[idx]; }, "padded");
    CHECK(memory_radius_zd(padded) == 1);

    CHECK_THROWS_AS(memory_radius_zd(build_cross_swap(3, 2), Budget{100, 100}),
                    WindowTooLarge);
}

TEST_CASE("is_shift_zd recovers translation vectors and rejects the rest") {
    auto t = is_shift_zd(shift_zd(2, 2, ZVec{1, -1}));
    REQUIRE(t.has_value());
    CHECK(*t == ZVec{1, -1});

    auto origin = is_shift_zd(identity_zd(2, 2));
    REQUIRE(origin.has_value());
    CHECK(*origin == ZVec{0, 0});

    // Padding does not hide a shift.
    std::size_t idx = ball_index(ZVec{1}, 2);
    SlidingBlockCodeZd padded(2, 1, 2,
                              [idx](const Sym* v) { return v[idx]; }, "padded");
    auto tp = is_shift_zd(padded);
    REQUIRE(tp.has_value());
    CHECK(*tp == ZVec{1});

    CHECK_FALSE(is_shift_zd(build_cross_swap(3, 2)).has_value());
    CHECK_THROWS_AS(is_shift_zd(build_cross_swap(3, 2), Budget{100, 100}),
                    WindowTooLarge);
}

TEST_CASE("phi_k conjugates the cross swap to an explicit 1-D rule") {
    SlidingBlockCodeZd g = build_cross_swap(3, 2);
    LatticeBasis b = basis_mk(2, 3);
    Code phi = phi_k(g, b);
    CHECK(phi.alphabet() == 3);
    CHECK(phi.label() == "phi_3(cross_swap)");
    CHECK(phi.support() == std::vector<long long>{-4, -3, -2, -1, 0, 1, 2, 3, 4});

    // The ball cells land on the line at ell(p) = p1 - 3 p0: the centre at 0
    // and the four axis neighbours at -3, -1, 1, 3.
    Code expected(3, {-4, -3, -2, -1, 0, 1, 2, 3, 4},
                  [](const Sym* v) -> Sym {
                      Sym c = v[4];
                      if (c != 1 && c != 2) return c;
                      if (v[1] || v[3] || v[5] || v[7]) return c;
                      return c == 1 ? Sym(2) : Sym(1);
                  },
                  "expected");
    CHECK(equal_codes(phi, expected));

    CHECK_THROWS_AS(phi_k(build_cross_swap(3, 3), b), InvalidArgument);
}

TEST_CASE("phi_k sends the translation by t to the line shift by ell(t)") {
    LatticeBasis b = basis_mk(2, 2);
    auto line_power = [&](const ZVec& t) {
        return is_shift(phi_k(shift_zd(2, 2, t), b));
    };
    CHECK(line_power(ZVec{0, 1}) == 1);
    CHECK(line_power(ZVec{1, 0}) == -2);
    CHECK(line_power(ZVec{1, 1}) == -1);
    // Hyperplane generators act trivially on the line.
    CHECK(line_power(ZVec{1, 2}) == 0);
    CHECK(line_power(ZVec{-1, -2}) == 0);
}

TEST_CASE("check_lk_uniqueness certifies the lift when the coset map separates") {
    SlidingBlockCodeZd g = build_cross_swap(3, 2);
    LiftReconstruction lift = check_lk_uniqueness(g, basis_mk(2, 3));
    CHECK(lift.ok);
    CHECK(lift.injectivity_threshold == 1);
    CHECK_FALSE(lift.mismatch.has_value());

    // k=2 collides on the radius-1 ball, so the lift is rejected up front.
    CHECK_THROWS_AS(check_lk_uniqueness(g, basis_mk(2, 2)),
                    InjectivityRadiusInsufficient);

    CHECK(check_lk_uniqueness(identity_zd(2, 2), basis_mk(2, 2)).ok);
}

TEST_CASE("radical_reduction_check certifies translations exactly") {
    ReductionVerdict v = radical_reduction_check(shift_zd(3, 2, ZVec{1, -1}));
    CHECK(v.is_translation);
    CHECK(v.translation == ZVec{1, -1});
    CHECK(v.memory_radius == 1);
    CHECK(v.lattice_k == 3);
    CHECK(v.line_shift == -4);
    CHECK(v.certificate ==
          "phi_3 action is sigma^-4; rule equals the projection at (1,-1) on "
          "every ball pattern");

    ReductionVerdict v2 = radical_reduction_check(shift_zd(2, 2, ZVec{0, 1}));
    CHECK(v2.is_translation);
    CHECK(v2.translation == ZVec{0, 1});
    CHECK(v2.line_shift == 1);

    // Identity in three dimensions: k grows past the colliding k=2.
    ReductionVerdict v3 = radical_reduction_check(identity_zd(2, 3));
    CHECK(v3.is_translation);
    CHECK(v3.translation == ZVec{0, 0, 0});
    CHECK(v3.memory_radius == 0);
    CHECK(v3.lattice_k == 3);
    CHECK(v3.line_shift == 0);
}

TEST_CASE("radical_reduction_check rejects non-translations with a certificate") {
    ReductionVerdict v = radical_reduction_check(build_cross_swap(3, 2));
    CHECK_FALSE(v.is_translation);
    CHECK(v.memory_radius == 1);
    CHECK(v.lattice_k == 3);
    CHECK(v.certificate.find("phi_3(cross_swap) matches no 1-D shift") !=
          std::string::npos);

    // Memory radius 0 but not a translation: the symbol flip.
    SlidingBlockCodeZd flip(2, 2, 0,
                            [](const Sym* v) { return Sym(1 - v[0]); }, "flip");
    ReductionVerdict vf = radical_reduction_check(flip);
    CHECK_FALSE(vf.is_translation);
    CHECK(vf.memory_radius == 0);
    CHECK(vf.lattice_k == 3);
    CHECK(vf.certificate.find("matches no 1-D shift") != std::string::npos);

    CHECK_THROWS_AS(radical_reduction_check(build_cross_swap(3, 2), Budget{100, 100}),
                    WindowTooLarge);
}
