#pragma once

// Independent oracles shared by the unit suites.  These deliberately avoid
// the production code paths they are checking: the group-law oracle uses the
// hardcoded low-order commutator expansion instead of the series enumeration,
// and random rational generators are self-contained.

#include "nilcalc/algebra.hpp"
#include "nilcalc/group_law.hpp"
#include "nilcalc/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using nilcalc::GradedLieAlgebra;
using nilcalc::Polynomial;
using nilcalc::Rational;
using nilcalc::RationalPoint;

inline std::vector<Rational> bracket(const GradedLieAlgebra& g, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    return g.bracket_vectors(a, b);
}

inline void axpy(std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

/// Classical commutator expansion of log(exp X exp Y) through words of
/// length four:
///   X + Y + 1/2 [X,Y] + 1/12 [X,[X,Y]] + 1/12 [Y,[Y,X]] - 1/24 [Y,[X,[X,Y]]].
/// Exact for nilpotency step <= 4, which covers the whole catalog.
inline RationalPoint bch_low_order(const GradedLieAlgebra& g, const RationalPoint& x,
                                   const RationalPoint& y) {
    std::vector<Rational> z(g.dim(), Rational(0));
    axpy(z, Rational(1), x);
    axpy(z, Rational(1), y);
    auto xy = bracket(g, x, y);
    axpy(z, Rational(1, 2), xy);
    auto xxy = bracket(g, x, xy);
    axpy(z, Rational(1, 12), xxy);
    auto yyx = bracket(g, y, bracket(g, y, x));
    axpy(z, Rational(1, 12), yyx);
    auto yxxy = bracket(g, y, xxy);
    axpy(z, Rational(-1, 24), yxxy);
    return z;
}

/// Deterministic small-rational sampler (numerators in [-9,9], denominators
/// in [1,5]).
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 5);
        return Rational(num(rng_), den(rng_));
    }

    RationalPoint point(int dim) {
        RationalPoint p(dim);
        for (auto& c : p) c = next();
        return p;
    }

    /// Random polynomial in the given variables with weighted degree <= d.
    Polynomial polynomial(const nilcalc::VarSet& vars, const std::vector<int>& weights, int d,
                          int terms) {
        auto idx = nilcalc::indices_up_to_degree(expand_weights(vars, weights), d);
        std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
        Polynomial p(vars);
        for (int t = 0; t < terms; ++t) p.add_term(idx[pick(rng_)], next());
        return p;
    }

  private:
    static std::vector<int> expand_weights(const nilcalc::VarSet& vars,
                                           const std::vector<int>& weights) {
        std::vector<int> w;
        for (std::size_t b = 0; b < vars.blocks.size(); ++b)
            w.insert(w.end(), weights.begin(), weights.end());
        return w;
    }
    std::mt19937_64 rng_;
};

inline bool points_equal(const RationalPoint& a, const RationalPoint& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace oracle
