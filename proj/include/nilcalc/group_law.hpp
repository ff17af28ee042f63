#pragma once

#include "nilcalc/algebra.hpp"
#include "nilcalc/polynomial.hpp"

#include <vector>

namespace nilcalc {

/// Exact polynomial group law in exponential coordinates: for each coordinate
/// k the polynomial (x*y)_k over the two-block variable set (x, y), computed
/// once per algebra from the Dynkin commutator series.  The series terminates
/// because nested brackets of weight beyond the top layer vanish.
class GroupLawTable {
  public:
    explicit GroupLawTable(const GradedLieAlgebra& algebra);

    const GradedLieAlgebra& algebra() const { return *algebra_; }
    /// (x*y)_k as a polynomial in (x, y).
    const Polynomial& coordinate(int k) const { return product_[k]; }
    const std::vector<Polynomial>& coordinates() const { return product_; }

    RationalPoint product(const RationalPoint& x, const RationalPoint& y) const;
    std::vector<double> product(const std::vector<double>& x, const std::vector<double>& y) const;

    /// p(x) -> p(x*y) as an exact polynomial in (x, y).
    Polynomial substitute_group_law(const Polynomial& p) const;
    /// p(x) -> p(y*x) (left translation), used for right-invariant fields and
    /// left-invariance checks.
    Polynomial substitute_left_translation(const Polynomial& p) const;

    /// Coefficients a_{jk}(x) of the left-invariant field
    /// X_j = sum_k a_{jk}(x) d/dx_k.
    const std::vector<Polynomial>& left_field(int j) const { return left_fields_[j]; }
    /// Right-invariant counterpart.
    const std::vector<Polynomial>& right_field(int j) const { return right_fields_[j]; }

    Polynomial apply_left_field(int j, const Polynomial& p) const;
    Polynomial apply_right_field(int j, const Polynomial& p) const;
    /// Applies X_{w_0} X_{w_1} ... X_{w_m} (operator composition, rightmost
    /// letter acts first).
    Polynomial apply_left_word(const std::vector<int>& word, const Polynomial& p) const;
    /// Ordered monomial X^beta = X_1^{b_1} ... X_n^{b_n}.
    Polynomial apply_left_monomial(const MultiIndex& beta, const Polynomial& p) const;

    const VarSet& group_vars() const { return vars_x_; }

  private:
    const GradedLieAlgebra* algebra_;
    VarSet vars_x_;
    VarSet vars_xy_;
    std::vector<Polynomial> product_;
    std::vector<std::vector<Polynomial>> left_fields_;
    std::vector<std::vector<Polynomial>> right_fields_;
};

/// Baker-Campbell-Hausdorff series evaluated directly on two polynomial
/// vectors; exposed for oracle use in tests (the table itself is built
/// through the same series, tests cross-check against the hardcoded
/// low-order commutator formula).
std::vector<Polynomial> dynkin_series(const GradedLieAlgebra& algebra,
                                      const std::vector<Polynomial>& x,
                                      const std::vector<Polynomial>& y, int max_word_length);

}  // namespace nilcalc
