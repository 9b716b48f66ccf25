#pragma once

// Sliding block codes on the full one-dimensional shift. A code stores the
// exact support of its local rule: the sorted list of relative cells the rule
// function may read. Builders and compose() maintain supports structurally,
// which keeps the exhaustive procedures (equality, projection detection,
// support minimization) within honest budgets: they enumerate |A|^{|support|}
// assignments, which decides the same predicate as a full-window sweep since
// cells outside the support never reach the rule function.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "autshift/biconfig.hpp"
#include "autshift/omega.hpp"

namespace autshift {

class SlidingBlockCode1D {
public:
    using Rule = std::function<Sym(const Sym*)>;

    /// `support` must be sorted and duplicate-free; `rule` receives values
    /// aligned with it (rule(v) sees v[i] = configuration at support[i]).
    SlidingBlockCode1D(int alphabet, std::vector<long long> support, Rule rule,
                       std::string label)
        : alphabet_(alphabet), support_(std::move(support)), rule_(std::move(rule)),
          label_(std::move(label)) {
        check_alphabet_size(alphabet_);
        if (support_.empty()) throw InvalidArgument("code support must be nonempty");
        for (std::size_t i = 1; i < support_.size(); ++i)
            if (support_[i - 1] >= support_[i])
                throw InvalidArgument("code support must be strictly increasing");
    }

    int alphabet() const { return alphabet_; }
    const std::vector<long long>& support() const { return support_; }
    long long support_min() const { return support_.front(); }
    long long support_max() const { return support_.back(); }
    /// Symmetric radius bound implied by the support.
    long long radius() const {
        return std::max(std::llabs(support_.front()), std::llabs(support_.back()));
    }
    const std::string& label() const { return label_; }

    Sym eval(const Sym* values_on_support) const { return rule_(values_on_support); }

    /// Image symbol at position m of configuration x.
    Sym image_value(const BiConfiguration& x, long long m) const {
        scratch_.clear();
        for (long long c : support_) scratch_.push_back(x.value_at(m + c));
        return rule_(scratch_.data());
    }

private:
    int alphabet_;
    std::vector<long long> support_;
    Rule rule_;
    std::string label_;
    mutable Word scratch_;
};

using Code = SlidingBlockCode1D;

// ---------------------------------------------------------------------------
// Builders

inline Code identity_code(int alphabet) {
    return Code(alphabet, {0}, [](const Sym* v) { return v[0]; }, "id");
}

/// sigma^m: image at position p equals source at p + m (sigma = shift_code 1).
inline Code shift_code(int alphabet, long long m) {
    return Code(alphabet, {m}, [](const Sym* v) { return v[0]; },
                "sigma^" + std::to_string(m));
}

/// Cell-wise symbol permutation (perm must be a bijection on 0..n-1).
inline Code symbol_perm_code(const std::vector<Sym>& perm, std::string label) {
    int n = (int)perm.size();
    check_alphabet_size(n);
    std::vector<bool> seen(perm.size(), false);
    for (Sym s : perm) {
        if (int(s) >= n || seen[s]) throw InvalidArgument("symbol map is not a permutation");
        seen[s] = true;
    }
    return Code(n, {0}, [perm](const Sym* v) { return perm[v[0]]; }, std::move(label));
}

/// Transposition a <-> b as a permutation vector.
inline std::vector<Sym> swap_perm(int alphabet, Sym a, Sym b) {
    std::vector<Sym> perm(static_cast<std::size_t>(alphabet));
    for (int s = 0; s < alphabet; ++s) perm[static_cast<std::size_t>(s)] = static_cast<Sym>(s);
    std::swap(perm[a], perm[b]);
    return perm;
}

/// outer ∘ inner (inner applied first). Support is the sumset; the rule
/// evaluates inner at every outer cell, then outer on those images.
inline Code compose(const Code& outer, const Code& inner) {
    if (outer.alphabet() != inner.alphabet())
        throw InvalidArgument("composed codes must share an alphabet");
    std::vector<long long> support;
    for (long long a : outer.support())
        for (long long b : inner.support()) support.push_back(a + b);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    // Index of each (outer cell + inner cell) in the composed support.
    auto index_of = [&support](long long c) {
        return std::lower_bound(support.begin(), support.end(), c) - support.begin();
    };
    std::vector<std::vector<std::size_t>> gather(outer.support().size());
    for (std::size_t i = 0; i < outer.support().size(); ++i)
        for (long long b : inner.support())
            gather[i].push_back(static_cast<std::size_t>(index_of(outer.support()[i] + b)));

    auto outer_copy = std::make_shared<Code>(outer);
    auto inner_copy = std::make_shared<Code>(inner);
    // Scratch windows are shared across evaluations (single-threaded reuse;
    // nested rules own their own scratch, so no aliasing).
    auto inner_window = std::make_shared<Word>(inner.support().size());
    auto outer_window = std::make_shared<Word>(outer.support().size());
    auto rule = [outer_copy, inner_copy, gather, inner_window, outer_window](const Sym* v) {
        Word& iw = *inner_window;
        Word& ow = *outer_window;
        for (std::size_t i = 0; i < gather.size(); ++i) {
            for (std::size_t j = 0; j < gather[i].size(); ++j) iw[j] = v[gather[i][j]];
            ow[i] = inner_copy->eval(iw.data());
        }
        return outer_copy->eval(ow.data());
    };
    return Code(outer.alphabet(), std::move(support), std::move(rule),
                outer.label() + "*" + inner.label());
}

/// h ∘ g ∘ h_inv; the caller supplies the inverse explicitly.
inline Code conjugate(const Code& g, const Code& h, const Code& h_inv) {
    return compose(h, compose(g, h_inv));
}

// ---------------------------------------------------------------------------
// Exact application

/// Image of an eventually periodic configuration; exact, with tails tracked
/// through the rule (the image tails have periods dividing the source ones).
inline BiConfiguration apply_code(const Code& g, const BiConfiguration& x) {
    if (g.alphabet() != x.alphabet())
        throw InvalidArgument("code and configuration alphabets differ");
    const long long lo = g.support_min(), hi = g.support_max();
    const long long A = x.anchor(), E = x.core_end();
    const long long L = (long long)x.left_tail().length();
    const long long R = (long long)x.right_tail().length();

    // Positions m < A - hi read only the left tail; m >= E - lo only the
    // right tail. Everything between is the image core.
    const long long core_from = A - hi;
    const long long core_to = std::max(core_from, E - lo);
    Word left, core, right;
    for (long long m = core_from - L; m < core_from; ++m) left.push_back(g.image_value(x, m));
    for (long long m = core_from; m < core_to; ++m) core.push_back(g.image_value(x, m));
    for (long long m = core_to; m < core_to + R; ++m) right.push_back(g.image_value(x, m));
    return BiConfiguration::from_parts(x.alphabet(), std::move(left), std::move(core),
                                       core_from, std::move(right));
}

/// Image of a cyclic word of length P (a configuration of period P).
inline Word apply_cyclic(const Code& g, const Word& w) {
    const long long P = (long long)w.size();
    Word out(w.size());
    Word window(g.support().size());
    for (long long j = 0; j < P; ++j) {
        for (std::size_t i = 0; i < g.support().size(); ++i)
            window[i] = w[static_cast<std::size_t>(floor_mod(j + g.support()[i], P))];
        out[static_cast<std::size_t>(j)] = g.eval(window.data());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive procedures (support-domain sweeps)

namespace detail {

/// Odometer over assignments (base `alphabet`, most significant first).
/// Returns false when the sweep wraps around.
inline bool odometer_next(Word& values, int alphabet) {
    for (std::size_t i = values.size(); i-- > 0;) {
        if (++values[i] < alphabet) return true;
        values[i] = 0;
    }
    return false;
}

inline std::vector<long long> union_support(const Code& a, const Code& b) {
    std::vector<long long> u = a.support();
    u.insert(u.end(), b.support().begin(), b.support().end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

inline std::vector<std::size_t> embedding(const std::vector<long long>& sub,
                                          const std::vector<long long>& super) {
    std::vector<std::size_t> idx;
    idx.reserve(sub.size());
    for (long long c : sub)
        idx.push_back(static_cast<std::size_t>(
            std::lower_bound(super.begin(), super.end(), c) - super.begin()));
    return idx;
}

inline long long sweep_size_or_throw(int alphabet, std::size_t cells, long long cap,
                                     const char* what) {
    auto total = checked_pow(alphabet, cells);
    if (!total || *total > cap)
        throw WindowTooLarge(std::string(what) + ": " + std::to_string(alphabet) + "^" +
                             std::to_string(cells) + " assignments exceed the budget of " +
                             std::to_string(cap));
    return *total;
}

}  // namespace detail

/// Counterexample to f == g: cells (the union support) and values where the
/// rules disagree; nullopt if the codes are equal as maps on the full shift.
struct SeparatingWindow {
    std::vector<long long> cells;
    Word values;
    Sym lhs, rhs;
};

inline std::optional<SeparatingWindow> separating_window(const Code& f, const Code& g,
                                                         const Budget& budget = {}) {
    if (f.alphabet() != g.alphabet())
        throw InvalidArgument("compared codes must share an alphabet");
    const int n = f.alphabet();
    auto cells = detail::union_support(f, g);
    detail::sweep_size_or_throw(n, cells.size(), budget.max_enumeration, "equal_codes");
    auto f_idx = detail::embedding(f.support(), cells);
    auto g_idx = detail::embedding(g.support(), cells);

    Word values(cells.size(), 0), fw(f.support().size()), gw(g.support().size());
    auto differs = [&]() -> std::optional<SeparatingWindow> {
        for (std::size_t i = 0; i < f_idx.size(); ++i) fw[i] = values[f_idx[i]];
        for (std::size_t i = 0; i < g_idx.size(); ++i) gw[i] = values[g_idx[i]];
        Sym a = f.eval(fw.data()), b = g.eval(gw.data());
        if (a != b) return SeparatingWindow{cells, values, a, b};
        return std::nullopt;
    };

    // Deterministic randomized pre-screen, then the exhaustive sweep.
    std::mt19937_64 rng(0x5eedULL);
    for (int trial = 0; trial < 256; ++trial) {
        for (auto& v : values) v = static_cast<Sym>(rng() % n);
        if (auto w = differs()) return w;
    }
    std::fill(values.begin(), values.end(), 0);
    do {
        if (auto w = differs()) return w;
    } while (detail::odometer_next(values, n));
    return std::nullopt;
}

/// Exact equality of two codes as maps on the full shift.
inline bool equal_codes(const Code& f, const Code& g, const Budget& budget = {}) {
    return !separating_window(f, g, budget).has_value();
}

/// Equivalent code reading only the cells the rule provably depends on.
/// The minimal support is unique, so the result's radius is minimal too.
inline Code minimal_support(const Code& g, const Budget& budget = {}) {
    const int n = g.alphabet();
    const auto& supp = g.support();
    detail::sweep_size_or_throw(n, supp.size(), budget.max_enumeration, "minimal_radius");

    std::vector<bool> essential(supp.size(), false);
    Word values(supp.size(), 0);
    for (std::size_t j = 0; j < supp.size(); ++j) {
        std::fill(values.begin(), values.end(), 0);
        bool found = false;
        do {
            Word probe = values;
            Sym base = g.eval(probe.data());
            for (int v = 0; v < n && !found; ++v) {
                probe[j] = static_cast<Sym>(v);
                found = (g.eval(probe.data()) != base);
            }
        } while (!found && detail::odometer_next(values, n));
        essential[j] = found;
    }

    std::vector<long long> kept;
    std::vector<std::size_t> kept_idx;
    for (std::size_t j = 0; j < supp.size(); ++j)
        if (essential[j]) {
            kept.push_back(supp[j]);
            kept_idx.push_back(j);
        }
    if (kept.size() == supp.size()) return g;
    if (kept.empty()) {
        // The rule is constant; keep cell 0 so the code stays well-formed.
        Word zeros(supp.size(), 0);
        Sym c = g.eval(zeros.data());
        return Code(n, {0}, [c](const Sym*) { return c; }, g.label());
    }
    auto g_copy = std::make_shared<Code>(g);
    std::size_t full = supp.size();
    auto rule = [g_copy, kept_idx, full](const Sym* v) {
        Word window(full, 0);  // dropped cells are provably irrelevant
        for (std::size_t i = 0; i < kept_idx.size(); ++i) window[kept_idx[i]] = v[i];
        return g_copy->eval(window.data());
    };
    return Code(n, std::move(kept), std::move(rule), g.label());
}

/// m when the rule is exactly the coordinate projection at m (g = sigma^m);
/// decided by one sweep that eliminates projection candidates.
inline std::optional<long long> is_shift(const Code& g, const Budget& budget = {}) {
    const int n = g.alphabet();
    const auto& supp = g.support();
    detail::sweep_size_or_throw(n, supp.size(), budget.max_enumeration, "is_shift");

    std::vector<std::size_t> candidates(supp.size());
    for (std::size_t i = 0; i < supp.size(); ++i) candidates[i] = i;
    Word values(supp.size(), 0);
    do {
        Sym out = g.eval(values.data());
        std::erase_if(candidates, [&](std::size_t i) { return values[i] != out; });
        if (candidates.empty()) return std::nullopt;
    } while (detail::odometer_next(values, n));
    return supp[candidates.front()];
}

/// Membership in G^*: every constant window maps to its own symbol (for an
/// invertible code this is exactly "fixes every Omega^a").
inline bool in_g_star(const Code& g) {
    for (int a = 0; a < g.alphabet(); ++a) {
        Word window(g.support().size(), static_cast<Sym>(a));
        if (g.eval(window.data()) != a) return false;
    }
    return true;
}

/// Constant-window permutation a -> image of the all-a configuration.
inline std::vector<Sym> constant_symbol_map(const Code& g) {
    std::vector<Sym> out;
    for (int a = 0; a < g.alphabet(); ++a) {
        Word window(g.support().size(), static_cast<Sym>(a));
        out.push_back(g.eval(window.data()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Induced boundary action

/// g . x = psi(g(phi(x))): the action of g on the boundary Omega. The image
/// configuration must stay eventually constant on the left and non-constant.
inline OmegaPoint act_omega(const Code& g, const OmegaPoint& x) {
    BiConfiguration image = apply_code(g, phi_embed(x));
    try {
        return psi_collapse(image);
    } catch (const ConstantConfiguration&) {
        throw ImageDegenerate("image of " + x.to_literal() + " under " + g.label() +
                              " is constant");
    } catch (const NotEventuallyConstantLeft&) {
        throw ImageDegenerate("image of " + x.to_literal() + " under " + g.label() +
                              " is not eventually constant on the left");
    }
}

/// Sequential boundary action of a word of codes (last letter acts first).
inline OmegaPoint act_omega_word(const std::vector<Code>& word, const OmegaPoint& x) {
    OmegaPoint y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = act_omega(*it, y);
    return y;
}

// ---------------------------------------------------------------------------
// Tabulation and cyclic sweeps

/// Code with the same rule backed by a lookup table (base-n positional index,
/// first support cell most significant). Speeds up exhaustive sweeps.
inline Code tabulate(const Code& g, const Budget& budget = {}) {
    const int n = g.alphabet();
    long long total =
        detail::sweep_size_or_throw(n, g.support().size(), budget.max_table, "tabulate");
    auto table = std::make_shared<std::vector<Sym>>();
    table->reserve(static_cast<std::size_t>(total));
    Word values(g.support().size(), 0);
    do {
        table->push_back(g.eval(values.data()));
    } while (detail::odometer_next(values, n));
    std::size_t cells = g.support().size();
    auto rule = [table, n, cells](const Sym* v) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < cells; ++i) idx = idx * static_cast<std::size_t>(n) + v[i];
        return (*table)[idx];
    };
    return Code(n, g.support(), std::move(rule), g.label());
}

/// Counterexample to "f(x) = g(x) for every configuration of period P":
/// the cyclic word, or nullopt. Complete at scale P — every length-P word
/// occurs in such a configuration. When P >= the full window width of both
/// codes this proves equality on the whole shift.
inline std::optional<Word> cyclic_counterexample(const Code& f, const Code& g, int period,
                                                 const Budget& budget = {}) {
    const int n = f.alphabet();
    if (n != g.alphabet()) throw InvalidArgument("compared codes must share an alphabet");
    detail::sweep_size_or_throw(n, static_cast<std::size_t>(period), budget.max_enumeration,
                                "cyclic sweep");
    Word w(static_cast<std::size_t>(period), 0);
    do {
        if (apply_cyclic(f, w) != apply_cyclic(g, w)) return w;
    } while (detail::odometer_next(w, n));
    return std::nullopt;
}

/// Counterexample to "g(g(x)) = x on every configuration of period P".
/// When the support is an interval the rule is tabulated once and each
/// application walks the cyclic word with a rolling window index, which keeps
/// the sweep linear in the period instead of quadratic in the window width.
inline std::optional<Word> cyclic_involution_counterexample(const Code& g, int period,
                                                            const Budget& budget = {}) {
    const int n = g.alphabet();
    detail::sweep_size_or_throw(n, static_cast<std::size_t>(period), budget.max_enumeration,
                                "cyclic sweep");
    const auto& supp = g.support();
    const std::size_t width = supp.size();
    const bool interval = (long long)width - 1 == supp.back() - supp.front() &&
                          (int)width <= period;
    std::optional<long long> table_size =
        checked_pow(n, width, interval ? budget.max_table : 0);

    Word w(static_cast<std::size_t>(period), 0);
    if (!interval || !table_size) {
        do {
            Word once = apply_cyclic(g, w);
            if (apply_cyclic(g, once) != w) return w;
        } while (detail::odometer_next(w, n));
        return std::nullopt;
    }

    std::vector<Sym> table;
    table.reserve(static_cast<std::size_t>(*table_size));
    Word values(width, 0);
    do {
        table.push_back(g.eval(values.data()));
    } while (detail::odometer_next(values, n));

    // Window at cell j reads cells j+lo .. j+lo+width-1 (mod P); the packed
    // index drops its most significant digit and appends the incoming cell.
    const long long lo = supp.front();
    const std::size_t P = static_cast<std::size_t>(period);
    const std::size_t un = static_cast<std::size_t>(n);
    std::size_t head_power = 1;
    for (std::size_t i = 0; i + 1 < width; ++i) head_power *= un;
    Word once(P), twice(P);
    auto apply_rolling = [&](const Word& src, Word& dst) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i + 1 < width; ++i)
            idx = idx * un +
                  src[static_cast<std::size_t>(floor_mod(lo + (long long)i, (long long)P))];
        for (std::size_t j = 0; j < P; ++j) {
            std::size_t incoming = static_cast<std::size_t>(
                floor_mod((long long)j + lo + (long long)width - 1, (long long)P));
            idx = idx * un + src[incoming];
            dst[j] = table[idx];
            idx %= head_power;
        }
    };
    do {
        apply_rolling(w, once);
        apply_rolling(once, twice);
        if (twice != w) return w;
    } while (detail::odometer_next(w, n));
    return std::nullopt;
}

/// Counterexample window to "g(g(x)) = x" over every configuration, or
/// nullopt: an exhaustive sweep of the doubled window (the sumset of the
/// support with itself, extended to contain the output cell 0). Needs an
/// interval support: the sweep then walks the window cells left to right and
/// keeps every inner table index rolling, so one assignment step costs a
/// handful of table lookups instead of a nested rule evaluation. The window
/// is enumerated in lexicographic order; the first failing window is
/// returned, laid out as cells cell_min..cell_max of the doubled support.
inline std::optional<Word> involution_counterexample_full(const Code& g,
                                                          const Budget& budget = {}) {
    const int n = g.alphabet();
    const auto& supp = g.support();
    const std::size_t W = supp.size();
    if ((long long)W - 1 != supp.back() - supp.front())
        throw InvalidArgument("full involution sweep needs an interval support");
    const long long lo = supp.front(), hi = supp.back();
    const long long cell_min = std::min(2 * lo, 0LL), cell_max = std::max(2 * hi, 0LL);
    const std::size_t C = static_cast<std::size_t>(cell_max - cell_min + 1);
    detail::sweep_size_or_throw(n, C, budget.max_enumeration, "full involution sweep");
    const long long table_size = detail::sweep_size_or_throw(n, W, budget.max_table, "tabulate");
    std::vector<Sym> table(static_cast<std::size_t>(table_size));
    {
        Word values(W, 0);
        std::size_t i = 0;
        do {
            table[i++] = g.eval(values.data());
        } while (detail::odometer_next(values, n));
    }
    // Cell j of the window is the coordinate cell_min+j. The inner output
    // feeding slot o of the outer window reads cells [f0+o, f0+o+W); the
    // composite output is compared against the cell at the origin.
    const std::size_t f0 = static_cast<std::size_t>(2 * lo - cell_min);
    const std::size_t center = static_cast<std::size_t>(-cell_min);
    const std::size_t scan_begin = f0 + W - 1;   // cell completing inner slot 0
    const std::size_t scan_end = f0 + 2 * W - 1;  // one past the last read cell
    long long wmod = 1;                           // n^(W-1)
    for (std::size_t i = 1; i < W; ++i) wmod *= n;

    Word cells(C, 0);
    Word digits(W, 0);                 // scan cells below the last: cells[scan_begin+o]
    std::vector<long long> roll(W + 1, 0), pack(W + 1, 0);
    const Sym* T = table.data();
    // roll[o]: the W-1 cells before scan cell o, packed; pack[o]: the first o
    // inner outputs, packed. Recomputing from level `from` renews both after
    // a digit change; lower levels are untouched. The last level is unrolled
    // in the hot loop instead of living in the chain.
    auto rechain = [&](std::size_t from) {
        for (std::size_t t = from; t + 1 < W; ++t) {
            cells[scan_begin + t] = digits[t];
            long long win = roll[t] * n + digits[t];
            roll[t + 1] = win - (long long)cells[f0 + t] * wmod;
            pack[t + 1] = pack[t] * n + T[static_cast<std::size_t>(win)];
        }
    };

    for (;;) {
        // The cells before scan_begin are fixed for this round: seed the roll.
        roll[0] = 0;
        for (std::size_t j = f0; j + 1 < f0 + W; ++j) roll[0] = roll[0] * n + cells[j];
        std::fill(digits.begin(), digits.end(), 0);
        rechain(0);
        for (;;) {
            const long long winb = roll[W - 1] * n;
            const long long packb = pack[W - 1] * n;
            Sym* last = &cells[scan_begin + W - 1];
            for (int d = 0; d < n; ++d) {
                *last = (Sym)d;
                const Sym out = T[static_cast<std::size_t>(
                    packb + T[static_cast<std::size_t>(winb + d)])];
                if (scan_end == C) {
                    if (out != cells[center]) return cells;
                } else {
                    // Cells past scan_end feed no inner window; they only
                    // matter when the origin lies among them.
                    std::fill(cells.begin() + (long long)scan_end, cells.end(), 0);
                    for (;;) {
                        if (out != cells[center]) return cells;
                        if (center < scan_end) break;
                        std::size_t t = C;
                        while (t > scan_end && cells[t - 1] == (Sym)(n - 1)) cells[--t] = 0;
                        if (t == scan_end) break;
                        ++cells[t - 1];
                    }
                }
            }
            std::size_t o = W - 1;
            while (o > 0 && digits[o - 1] == (Sym)(n - 1)) digits[--o] = 0;
            if (o == 0) break;
            ++digits[o - 1];
            rechain(o - 1);
        }
        std::size_t p = scan_begin;
        while (p > 0 && cells[p - 1] == (Sym)(n - 1)) cells[--p] = 0;
        if (p == 0) break;
        ++cells[p - 1];
    }
    return std::nullopt;
}

/// Window over supp(g) ∪ {0} whose rule output differs from the value at the
/// center cell; nullopt means g is the identity. Witness for faithfulness.
inline std::optional<SeparatingWindow> find_moved_window(const Code& g,
                                                         const Budget& budget = {}) {
    return separating_window(g, identity_code(g.alphabet()), budget);
}

}  // namespace autshift
