#pragma once

#include "nilcalc/group_law.hpp"
#include "nilcalc/linear_solve.hpp"

#include <map>
#include <vector>

namespace nilcalc {

/// One term of the expansion q_alpha(x*y) = sum c q_{a1}(x) q_{a2}(y).
struct DecompositionTerm {
    MultiIndex alpha1;
    MultiIndex alpha2;
    Rational c;
};

/// The polynomial basis dual to the ordered enveloping-algebra monomials
/// under the pairing "apply X^beta, evaluate at the identity":
/// X^beta q_alpha(0) = delta_{alpha,beta}.  Built degree by degree through an
/// exact linear solve; each slice is a basis of the homogeneous polynomials
/// of that weighted degree.
class DualBasisTable {
  public:
    DualBasisTable(const GroupLawTable& law, int max_degree);

    const GroupLawTable& law() const { return *law_; }
    const GradedLieAlgebra& algebra() const { return law_->algebra(); }
    int max_degree() const { return max_degree_; }

    const Polynomial& q(const MultiIndex& alpha) const;
    /// q_alpha(x^{-1}) = q_alpha(-x).
    Polynomial q_tilde(const MultiIndex& alpha) const;

    const std::vector<MultiIndex>& degree_slice(int d) const { return slices_.at(d); }

    /// Pairing matrix A_{beta,gamma} = (X^beta x^gamma)(0) over the degree-d
    /// slice (rows: beta, columns: gamma in slice order).
    const RationalMatrix& pairing_matrix(int d) const { return pairing_.at(d); }

    /// Expands q_alpha(x*y) in the tensor basis; verifies the expansion
    /// exactly and throws InternalConsistencyError on a nonzero residual.
    std::vector<DecompositionTerm> decomposition(const MultiIndex& alpha) const;

    /// P^{(f)}_{x,M}(z) = sum_{[alpha]<=M} (X^alpha f)(x) q_alpha(z), over
    /// blocks (x, z).
    Polynomial taylor_polynomial(const Polynomial& f, int M) const;
    /// f(x*z) - P^{(f)}_{x,M}(z).
    Polynomial taylor_remainder(const Polynomial& f, int M) const;

  private:
    const GroupLawTable* law_;
    int max_degree_;
    std::map<int, std::vector<MultiIndex>> slices_;
    std::map<int, RationalMatrix> pairing_;
    std::map<MultiIndex, Polynomial> q_;
};

}  // namespace nilcalc
