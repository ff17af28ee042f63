#pragma once

#include "nilcalc/grid.hpp"
#include "nilcalc/operators.hpp"

#include <vector>

namespace nilcalc {

/// Coordinate form of a variable-coefficient invariant operator:
/// sum_gamma a_gamma(x) d^gamma, obtained by expanding each left-invariant
/// monomial through the field coefficient tables.
class CoordinateOperator {
  public:
    struct Term {
        MultiIndex partial;
        Polynomial coeff;
    };

    static CoordinateOperator from_operator(const GroupLawTable& law, const VarCoeffOperator& op);
    static CoordinateOperator from_invariant(const GroupLawTable& law, const InvariantOperator& op);

    const std::vector<Term>& terms() const { return terms_; }

    /// Symbolic application (used by the unit tests to cross-check the
    /// expansion against the field route).
    Polynomial apply(const Polynomial& f) const;

  private:
    std::vector<Term> terms_;
};

/// Grid application of a coordinate operator with second-order centered
/// stencils and zero extension outside the box.  Coefficient fields are
/// sampled once per (operator, grid) pair.
class FdOperator {
  public:
    FdOperator(const GroupLawTable& law, const VarCoeffOperator& op, const GridSpec& spec);
    FdOperator(const GroupLawTable& law, const InvariantOperator& op, const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }

    GridFunction apply(const GridFunction& f) const;
    /// Applies into a preallocated buffer (heat stepping path).
    void apply_into(const std::vector<double>& f, std::vector<double>& out) const;

    /// Nodes farther than this many cells from every face see the full
    /// stencil (per axis).
    const std::vector<int>& interior_margin() const { return margin_; }
    /// Crude spectral-radius estimate sum_terms max|a| * sum|stencil| used
    /// for explicit time-step seeding.
    double gershgorin_estimate() const;

  private:
    void build(const GroupLawTable& law, const CoordinateOperator& op);

    struct CompiledTerm {
        MultiIndex partial;
        std::vector<double> coeff_samples;  // empty means constant 1
        double constant = 1.0;
    };

    GridSpec spec_;
    std::vector<CompiledTerm> terms_;
    std::vector<int> margin_;
};

/// Restricts a comparison to nodes at least `margin` cells away from each
/// face; returns max abs difference there.
double interior_max_abs_diff(const GridFunction& a, const GridFunction& b,
                             const std::vector<int>& margin);

}  // namespace nilcalc
