#pragma once

// Sliding block codes on d-dimensional configurations and the reduction that
// turns questions about them into questions about 1-D codes: restrict to
// U_k-periodic configurations, identify those with their coset lines, and
// conjugate the d-dimensional rule into a 1-D rule phi_k(g).
//
// d-dimensional rules stay callable; tables of size |A|^(2r+1)^d are only
// ever enumerated behind explicit budget checks.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autshift/block_code.hpp"
#include "autshift/lattice.hpp"

namespace autshift {

class SlidingBlockCodeZd {
public:
    /// `rule` receives the values on the closed sup-norm ball of the given
    /// radius, row-major with the last coordinate fastest (ball_points order).
    using Rule = std::function<Sym(const Sym*)>;

    SlidingBlockCodeZd(int alphabet, int d, long long radius, Rule rule, std::string label)
        : alphabet_(alphabet), d_(d), radius_(radius), rule_(std::move(rule)),
          label_(std::move(label)) {
        check_alphabet_size(alphabet_);
        if (d_ < 1) throw InvalidArgument("dimension must be >= 1");
        if (radius_ < 0) throw InvalidArgument("radius must be >= 0");
    }

    int alphabet() const { return alphabet_; }
    int dimension() const { return d_; }
    long long radius() const { return radius_; }
    const std::string& label() const { return label_; }

    Sym eval(const Sym* values_on_ball) const { return rule_(values_on_ball); }

    std::size_t ball_size() const { return ball_points(d_, radius_).size(); }

private:
    int alphabet_;
    int d_;
    long long radius_;
    Rule rule_;
    std::string label_;
};

inline SlidingBlockCodeZd identity_zd(int alphabet, int d) {
    return SlidingBlockCodeZd(alphabet, d, 0, [](const Sym* v) { return v[0]; }, "id");
}

/// [sigma_t x]_p = x_{p+t}.
inline SlidingBlockCodeZd shift_zd(int alphabet, int d, const ZVec& t) {
    if ((int)t.size() != d) throw InvalidArgument("shift vector dimension mismatch");
    long long r = sup_norm(t);
    std::size_t idx = ball_index(t, r);
    return SlidingBlockCodeZd(alphabet, d, r, [idx](const Sym* v) { return v[idx]; },
                              "sigma_" + zvec_to_string(t));
}

/// Swaps 1 <-> 2 at a cell exactly when all 2d axis neighbours are 0;
/// an involution commuting with every shift.
inline SlidingBlockCodeZd build_cross_swap(int alphabet, int d) {
    check_alphabet_size(alphabet);
    if (alphabet < 3) throw InvalidArgument("cross swap needs at least 3 symbols");
    std::size_t center = ball_index(ZVec((std::size_t)d, 0), 1);
    std::vector<std::size_t> neighbours;
    for (int axis = 0; axis < d; ++axis)
        for (int sign : {-1, 1}) {
            ZVec p((std::size_t)d, 0);
            p[(std::size_t)axis] = sign;
            neighbours.push_back(ball_index(p, 1));
        }
    auto rule = [center, neighbours](const Sym* v) -> Sym {
        Sym c = v[center];
        if (c != 1 && c != 2) return c;
        for (std::size_t n : neighbours)
            if (v[n] != 0) return c;
        return c == 1 ? Sym(2) : Sym(1);
    };
    return SlidingBlockCodeZd(alphabet, d, 1, rule, "cross_swap");
}

/// outer after inner; radius adds, inner evaluated on each outer cell.
inline SlidingBlockCodeZd compose_zd(const SlidingBlockCodeZd& outer,
                                     const SlidingBlockCodeZd& inner) {
    if (outer.alphabet() != inner.alphabet() || outer.dimension() != inner.dimension())
        throw InvalidArgument("composition needs matching alphabet and dimension");
    const int d = outer.dimension();
    const long long r = outer.radius() + inner.radius();
    // For every outer ball cell q, the row-major indices (in the big ball)
    // of the inner ball translated to q.
    std::vector<std::vector<std::size_t>> gather;
    for (const ZVec& q : ball_points(d, outer.radius())) {
        std::vector<std::size_t> row;
        for (const ZVec& s : ball_points(d, inner.radius())) {
            ZVec p(q);
            for (int j = 0; j < d; ++j) p[(std::size_t)j] += s[(std::size_t)j];
            row.push_back(ball_index(p, r));
        }
        gather.push_back(std::move(row));
    }
    // Shared scratch: reused across evaluations (single-threaded); every
    // gather row has the inner ball's size.
    auto mid = std::make_shared<Word>(gather.size(), 0);
    auto buf = std::make_shared<Word>(gather.empty() ? 0 : gather.front().size(), 0);
    auto rule = [outer, inner, gather, mid, buf](const Sym* v) -> Sym {
        Word& m = *mid;
        Word& b = *buf;
        for (std::size_t qi = 0; qi < gather.size(); ++qi) {
            for (std::size_t j = 0; j < gather[qi].size(); ++j) b[j] = v[gather[qi][j]];
            m[qi] = inner.eval(b.data());
        }
        return outer.eval(m.data());
    };
    return SlidingBlockCodeZd(outer.alphabet(), d, r, rule,
                              outer.label() + "*" + inner.label());
}

/// Replace the rule by a precomputed table over all ball patterns
/// (budget-gated); the resulting code is the same map with O(ball) lookups.
inline SlidingBlockCodeZd tabulate_zd(const SlidingBlockCodeZd& g, const Budget& budget = {}) {
    const int n = g.alphabet();
    const std::size_t cells = g.ball_size();
    auto size = checked_pow(n, cells, budget.max_table);
    if (!size)
        throw WindowTooLarge("table of |A|^" + std::to_string(cells) +
                             " ball patterns exceeds the budget");
    auto table = std::make_shared<Word>((std::size_t)*size, 0);
    Word buf(cells, 0);
    std::size_t idx = 0;
    do {
        (*table)[idx++] = g.eval(buf.data());
    } while (detail::odometer_next(buf, n));
    auto rule = [table, cells, n](const Sym* v) -> Sym {
        std::size_t at = 0;
        for (std::size_t i = 0; i < cells; ++i) at = at * (std::size_t)n + v[i];
        return (*table)[at];
    };
    return SlidingBlockCodeZd(n, g.dimension(), g.radius(), rule, g.label());
}

namespace detail {

/// Row-major indices (within the radius-r ball) of the cells of the
/// radius-rho sub-ball.
inline std::vector<std::size_t> sub_ball_cells(int d, long long r, long long rho) {
    std::vector<std::size_t> cells;
    for (const ZVec& p : ball_points(d, rho)) cells.push_back(ball_index(p, r));
    return cells;
}

inline long long zd_sweep_size_or_throw(const SlidingBlockCodeZd& g, const Budget& budget) {
    auto total = checked_pow(g.alphabet(), g.ball_size(), budget.max_enumeration);
    if (!total)
        throw WindowTooLarge("enumerating |A|^" + std::to_string(g.ball_size()) +
                             " ball patterns exceeds the budget");
    return *total;
}

}  // namespace detail

/// Minimal rho such that the rule is determined by the radius-rho sub-ball.
/// Complete: sweeps every pattern on the declared ball (budget-gated).
inline long long memory_radius_zd(const SlidingBlockCodeZd& g, const Budget& budget = {}) {
    const int d = g.dimension(), n = g.alphabet();
    const long long r = g.radius();
    if (r == 0) return 0;
    detail::zd_sweep_size_or_throw(g, budget);
    for (long long rho = 0; rho < r; ++rho) {
        auto cells = detail::sub_ball_cells(d, r, rho);
        auto memo_size = checked_pow(n, cells.size(), budget.max_table);
        if (!memo_size)
            throw WindowTooLarge("memory table |A|^" + std::to_string(cells.size()) +
                                 " exceeds the budget");
        std::vector<int> memo((std::size_t)*memo_size, -1);
        Word buf(g.ball_size(), 0);
        bool factors = true;
        do {
            std::size_t idx = 0;
            for (std::size_t c : cells) idx = idx * (std::size_t)n + buf[c];
            int out = g.eval(buf.data());
            if (memo[idx] < 0) {
                memo[idx] = out;
            } else if (memo[idx] != out) {
                factors = false;
                break;
            }
        } while (detail::odometer_next(buf, n));
        if (factors) return rho;
    }
    return r;
}

/// The translation vector t with g = sigma_t, if one exists. Complete sweep
/// over all ball patterns: candidate cells are eliminated by any pattern
/// where their value differs from the output, and a surviving candidate has
/// been checked against every pattern.
inline std::optional<ZVec> is_shift_zd(const SlidingBlockCodeZd& g, const Budget& budget = {}) {
    detail::zd_sweep_size_or_throw(g, budget);
    const auto points = ball_points(g.dimension(), g.radius());
    std::vector<std::size_t> candidates(points.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
    Word buf(points.size(), 0);
    do {
        Sym out = g.eval(buf.data());
        std::size_t kept = 0;
        for (std::size_t c : candidates)
            if (buf[c] == out) candidates[kept++] = c;
        candidates.resize(kept);
        if (candidates.empty()) return std::nullopt;
    } while (detail::odometer_next(buf, g.alphabet()));
    return points[candidates.front()];
}

/// Conjugate g into a 1-D code through the coset identification: the image
/// of a U_k-periodic configuration is again U_k-periodic, and its line at n
/// is g evaluated on the ball at n*v, whose cell at offset p carries the
/// line value at n + ell(p). Support: the distinct coset indices of the ball.
inline Code phi_k(const SlidingBlockCodeZd& g, const LatticeBasis& basis) {
    if (g.dimension() != basis.d)
        throw InvalidArgument("code dimension does not match the basis");
    const auto points = ball_points(g.dimension(), g.radius());
    std::vector<long long> ells;
    for (const ZVec& p : points) ells.push_back(ell_of(p, basis));
    std::vector<long long> support(ells);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<std::size_t> slot;
    for (long long e : ells)
        slot.push_back((std::size_t)(std::lower_bound(support.begin(), support.end(), e) -
                                     support.begin()));
    // Shared scratch: reused across evaluations (single-threaded).
    auto buf = std::make_shared<Word>(slot.size(), 0);
    auto rule = [g, slot, buf](const Sym* line_values) -> Sym {
        Word& b = *buf;
        for (std::size_t i = 0; i < slot.size(); ++i) b[i] = line_values[slot[i]];
        return g.eval(b.data());
    };
    return Code(g.alphabet(), std::move(support), rule,
                "phi_" + std::to_string(basis.k) + "(" + g.label() + ")");
}

struct LiftReconstruction {
    bool ok = false;
    long long injectivity_threshold = 0;       ///< measured on the ball radius
    std::optional<PatternOnBall> mismatch;     ///< pattern where the lift disagrees
    Sym direct = 0, reconstructed = 0;         ///< outputs at the mismatch
};

/// Every ball pattern lifts to a unique U_k-periodic configuration once the
/// coset map is injective on the ball; this checks that evaluating phi_k(g)
/// on those lifted lines reproduces g's rule on every pattern.
inline LiftReconstruction check_lk_uniqueness(const SlidingBlockCodeZd& g,
                                              const LatticeBasis& basis,
                                              const Budget& budget = {}) {
    const long long r = g.radius();
    LiftReconstruction out;
    auto inj = coset_injectivity_threshold(basis.d, basis.k, r);
    out.injectivity_threshold = inj.threshold;
    if (inj.threshold < r) {
        std::string msg = "coset map injective only to radius " +
                          std::to_string(inj.threshold) + ", ball radius is " +
                          std::to_string(r);
        if (inj.collision)
            msg += "; collision " + zvec_to_string(inj.collision->first) + " vs " +
                   zvec_to_string(inj.collision->second);
        throw InjectivityRadiusInsufficient(msg);
    }
    detail::zd_sweep_size_or_throw(g, budget);
    Code phi = phi_k(g, basis);
    PatternOnBall pat{g.alphabet(), g.dimension(), r, Word(g.ball_size(), 0)};
    do {
        Sym direct = g.eval(pat.values.data());
        Sym lifted = phi.image_value(complete_pattern(pat, basis).line, 0);
        if (direct != lifted) {
            out.mismatch = pat;
            out.direct = direct;
            out.reconstructed = lifted;
            return out;
        }
    } while (detail::odometer_next(pat.values, g.alphabet()));
    out.ok = true;
    return out;
}

struct ReductionVerdict {
    bool is_translation = false;
    ZVec translation;                 ///< meaningful when is_translation
    long long memory_radius = 0;      ///< measured, not declared
    int lattice_k = 0;                ///< first k whose coset map separates the ball
    long long line_shift = 0;         ///< the 1-D shift power, when one exists
    std::string certificate;
};

/// Decide whether g is a translation by reducing to one dimension: measure
/// the memory radius, grow k until the coset map is injective on that ball,
/// test phi_k(g) against 1-D shifts, pull the shift power back to the unique
/// in-ball lattice point, and confirm g's rule is that projection everywhere.
inline ReductionVerdict radical_reduction_check(const SlidingBlockCodeZd& g,
                                                const Budget& budget = {}) {
    ReductionVerdict verdict;
    const int d = g.dimension(), n = g.alphabet();
    const long long r = memory_radius_zd(g, budget);
    verdict.memory_radius = r;

    int k = (int)std::max<long long>(2, 2 * r + 1);
    while (coset_injectivity_threshold(d, k, std::max<long long>(r, 1)).threshold <
           std::max<long long>(r, 1))
        ++k;
    verdict.lattice_k = k;
    LatticeBasis basis = basis_mk(d, k);

    Code phi = phi_k(g, basis);
    std::optional<long long> m = is_shift(phi, budget);
    if (!m) {
        verdict.certificate = "phi_" + std::to_string(k) + "(" + g.label() +
                              ") matches no 1-D shift: every candidate power was "
                              "eliminated by an explicit pattern";
        return verdict;
    }
    verdict.line_shift = *m;

    std::optional<ZVec> t;
    for (const ZVec& p : ball_points(d, r))
        if (ell_of(p, basis) == *m) {
            t = p;
            break;
        }
    if (!t) {
        verdict.certificate = "line action is sigma^" + std::to_string(*m) +
                              " but no vector of the memory ball lies in that coset";
        return verdict;
    }

    // Confirm the rule is the projection at t over the declared ball.
    detail::zd_sweep_size_or_throw(g, budget);
    std::size_t t_idx = ball_index(*t, g.radius());
    Word buf(g.ball_size(), 0);
    do {
        if (g.eval(buf.data()) != buf[t_idx]) {
            verdict.certificate = "line action is sigma^" + std::to_string(*m) +
                                  " but the rule differs from the projection at " +
                                  zvec_to_string(*t);
            return verdict;
        }
    } while (detail::odometer_next(buf, n));

    verdict.is_translation = true;
    verdict.translation = *t;
    verdict.certificate = "phi_" + std::to_string(k) + " action is sigma^" +
                          std::to_string(*m) + "; rule equals the projection at " +
                          zvec_to_string(*t) + " on every ball pattern";
    return verdict;
}

}  // namespace autshift
