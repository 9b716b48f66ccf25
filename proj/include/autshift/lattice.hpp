#pragma once

// The unimodular lattice reduction: basis M_k whose first d-1 rows span the
// sublattice U_k, the coset decomposition p = u + ell(p)·v, and the pattern
// completion machinery for U_k-periodic configurations. All balls use the
// sup-norm; that choice is isolated here.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autshift/biconfig.hpp"

namespace autshift {

using ZVec = std::vector<long long>;

inline long long sup_norm(const ZVec& p) {
    long long n = 0;
    for (long long c : p) n = std::max(n, c < 0 ? -c : c);
    return n;
}

inline std::string zvec_to_string(const ZVec& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

struct LatticeBasis {
    int d = 2;
    int k = 2;
    std::vector<ZVec> rows;  ///< row i < d-1: e_i + k e_{i+1}; row d-1: v = e_{d-1}

    const ZVec& v() const { return rows.back(); }
};

/// Rows of M_k. Upper triangular with unit diagonal, hence determinant 1.
inline LatticeBasis basis_mk(int d, int k) {
    if (d < 2) throw InvalidArgument("lattice reduction needs dimension >= 2");
    if (k < 1) throw InvalidArgument("lattice parameter k must be >= 1");
    LatticeBasis basis;
    basis.d = d;
    basis.k = k;
    for (int i = 0; i < d; ++i) {
        ZVec row((std::size_t)d, 0);
        row[(std::size_t)i] = 1;
        if (i + 1 < d) row[(std::size_t)i + 1] = k;
        basis.rows.push_back(std::move(row));
    }
    return basis;
}

struct CosetDecomposition {
    std::vector<long long> coeffs;  ///< c_1..c_{d-1} for the first d-1 rows
    long long ell = 0;              ///< coefficient of v
};

/// Back-substitution: c_1 = p_1, c_i = p_i - k c_{i-1}, ell = p_d - k c_{d-1}.
inline CosetDecomposition decompose(const ZVec& p, const LatticeBasis& basis) {
    if ((int)p.size() != basis.d)
        throw InvalidArgument("point dimension does not match the basis");
    CosetDecomposition out;
    long long prev = 0;
    for (int i = 0; i + 1 < basis.d; ++i) {
        long long c = p[(std::size_t)i] - basis.k * prev;
        out.coeffs.push_back(c);
        prev = c;
    }
    out.ell = p[(std::size_t)basis.d - 1] - basis.k * prev;
    return out;
}

/// Coset index of p: ell with p in U_k + ell·v (linear in p).
inline long long ell_of(const ZVec& p, const LatticeBasis& basis) {
    return decompose(p, basis).ell;
}

/// Sigma c_i row_i + ell v.
inline ZVec reconstruct(const CosetDecomposition& dec, const LatticeBasis& basis) {
    ZVec p((std::size_t)basis.d, 0);
    for (std::size_t i = 0; i + 1 < (std::size_t)basis.d; ++i)
        for (int j = 0; j < basis.d; ++j)
            p[(std::size_t)j] += dec.coeffs[i] * basis.rows[i][(std::size_t)j];
    for (int j = 0; j < basis.d; ++j)
        p[(std::size_t)j] += dec.ell * basis.rows[(std::size_t)basis.d - 1][(std::size_t)j];
    return p;
}

struct NormSearchResult {
    long long value = 0;
    ZVec witness;
};

/// Minimum sup-norm over nonzero combinations of the first d-1 rows with
/// coefficients bounded by coeff_bound, with an achieving witness.
inline NormSearchResult min_norm_uk(int d, int k, long long coeff_bound) {
    if (coeff_bound < 1) throw InvalidArgument("coefficient bound must be >= 1");
    LatticeBasis basis = basis_mk(d, k);
    NormSearchResult best;
    std::vector<long long> c((std::size_t)d - 1, -coeff_bound);
    auto advance = [&]() {
        for (std::size_t i = c.size(); i-- > 0;) {
            if (++c[i] <= coeff_bound) return true;
            c[i] = -coeff_bound;
        }
        return false;
    };
    do {
        bool zero = true;
        for (long long ci : c) zero = zero && ci == 0;
        if (zero) continue;
        ZVec p((std::size_t)d, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (int j = 0; j < d; ++j) p[(std::size_t)j] += c[i] * basis.rows[i][(std::size_t)j];
        long long n = sup_norm(p);
        if (best.witness.empty() || n < best.value) {
            best.value = n;
            best.witness = p;
        }
    } while (advance());
    // Canonical sign: first nonzero coordinate positive.
    for (long long c : best.witness) {
        if (c > 0) break;
        if (c < 0) {
            for (long long& w : best.witness) w = -w;
            break;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Sup-norm balls (row-major, last coordinate fastest)

inline std::vector<ZVec> ball_points(int d, long long radius) {
    std::vector<ZVec> out;
    ZVec p((std::size_t)d, -radius);
    while (true) {
        out.push_back(p);
        std::size_t i = p.size();
        while (i-- > 0) {
            if (++p[i] <= radius) break;
            p[i] = -radius;
            if (i == 0) return out;
        }
        if (p == ZVec((std::size_t)d, -radius)) return out;  // wrapped fully
    }
}

/// Row-major index of p in ball_points(d, radius); p must lie in the ball.
inline std::size_t ball_index(const ZVec& p, long long radius) {
    std::size_t idx = 0;
    const std::size_t side = (std::size_t)(2 * radius + 1);
    for (long long c : p) {
        if (c < -radius || c > radius)
            throw InvalidArgument("point " + zvec_to_string(p) + " outside the radius-" +
                                  std::to_string(radius) + " ball");
        idx = idx * side + (std::size_t)(c + radius);
    }
    return idx;
}

struct InjectivityResult {
    long long threshold = 0;  ///< largest tested radius with injective ell
    bool exhausted = true;    ///< true when injective through rho_max
    std::optional<std::pair<ZVec, ZVec>> collision;  ///< witness above threshold
};

/// Largest rho <= rho_max with no two distinct points of B_rho congruent
/// mod U_k; congruence mod U_k is exactly equality of coset indices.
inline InjectivityResult coset_injectivity_threshold(int d, int k, long long rho_max) {
    LatticeBasis basis = basis_mk(d, k);
    InjectivityResult out;
    for (long long rho = 1; rho <= rho_max; ++rho) {
        std::map<long long, ZVec> seen;
        for (const ZVec& p : ball_points(d, rho)) {
            auto [it, fresh] = seen.emplace(ell_of(p, basis), p);
            if (!fresh) {
                out.collision = std::make_pair(it->second, p);
                out.exhausted = false;
                return out;
            }
        }
        out.threshold = rho;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Patterns and U_k-periodic configurations

struct PatternOnBall {
    int alphabet = 2;
    int d = 2;
    long long radius = 0;
    Word values;  ///< row-major over ball_points(d, radius)

    Sym at(const ZVec& p) const { return values[ball_index(p, radius)]; }
    void validate() const {
        check_alphabet_size(alphabet);
        auto expect = ball_points(d, radius).size();
        if (values.size() != expect)
            throw InvalidArgument("pattern needs " + std::to_string(expect) +
                                  " cells, got " + std::to_string(values.size()));
        check_word_alphabet(values, alphabet, "ball pattern");
    }
};

/// A U_k-periodic configuration: one line of values indexed by coset.
struct PeriodicZdConfiguration {
    LatticeBasis basis;
    BiConfiguration line;

    Sym value_at(const ZVec& p) const { return line.value_at(ell_of(p, basis)); }
};

/// The projection [pi(x)]_n = x_{n v} of a U_k-periodic configuration is its
/// coset line; lifting a line back is its inverse by construction.
inline BiConfiguration project_pi(const PeriodicZdConfiguration& y) { return y.line; }

inline PeriodicZdConfiguration lift_pi_inverse(BiConfiguration z, const LatticeBasis& basis) {
    return PeriodicZdConfiguration{basis, std::move(z)};
}

/// U_k-periodic configuration agreeing with the pattern on its ball,
/// unconstrained cosets filled with 0. Fails exactly on coset collisions
/// carrying conflicting symbols.
inline PeriodicZdConfiguration complete_pattern(const PatternOnBall& x,
                                                const LatticeBasis& basis) {
    x.validate();
    if (x.d != basis.d) throw InvalidArgument("pattern dimension does not match the basis");
    std::map<long long, std::pair<ZVec, Sym>> assigned;
    for (const ZVec& p : ball_points(x.d, x.radius)) {
        long long ell = ell_of(p, basis);
        Sym s = x.at(p);
        auto [it, fresh] = assigned.emplace(ell, std::make_pair(p, s));
        if (!fresh && it->second.second != s)
            throw CollisionConstraint(
                "cells " + zvec_to_string(it->second.first) + " and " + zvec_to_string(p) +
                " share coset " + std::to_string(ell) + " but carry symbols " +
                std::string(1, symbol_to_char(it->second.second)) + " and " +
                std::string(1, symbol_to_char(s)));
    }
    long long lo = assigned.begin()->first, hi = assigned.rbegin()->first;
    Word core((std::size_t)(hi - lo + 1), 0);
    for (const auto& [ell, cell] : assigned) core[(std::size_t)(ell - lo)] = cell.second;
    return PeriodicZdConfiguration{
        basis, BiConfiguration::from_parts(x.alphabet, {0}, std::move(core), lo, {0})};
}

}  // namespace autshift
