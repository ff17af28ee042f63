#pragma once

#include "nilcalc/multi_index.hpp"
#include "nilcalc/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nilcalc {

/// One structure-constant entry: [X_i, X_j] contains c * X_k (0-based i,j,k).
struct BracketTerm {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational c;
};

struct ValidationIssue {
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> violations;
};

/// A graded nilpotent Lie algebra in an adapted basis: dimension, dilation
/// weights and rational structure constants.  Derived data (homogeneous
/// dimension, lcm of weights, max weight) is computed on construction.
class GradedLieAlgebra {
  public:
    GradedLieAlgebra(std::string name, std::vector<int> weights,
                     std::vector<BracketTerm> brackets);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(weights_.size()); }
    const std::vector<int>& weights() const { return weights_; }

    /// Q = sum of the weights.
    int homogeneous_dimension() const { return homogeneous_dimension_; }
    /// Least common multiple of the weights (the canonical choice for the
    /// homogeneous norm exponent).
    int nu_o() const { return nu_o_; }
    int max_weight() const { return max_weight_; }

    /// [X_i, X_j] as a sparse coefficient vector over the basis.
    const std::vector<std::pair<int, Rational>>& bracket(int i, int j) const;

    /// Bracket of two coefficient vectors (entries indexed by basis element).
    std::vector<Rational> bracket_vectors(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) const;

    /// Checks antisymmetry, the Jacobi identity and weight compatibility
    /// (c_ij^k nonzero only when w_k = w_i + w_j).
    ValidationReport validate() const;

    /// [alpha] = sum_j w_j alpha_j.
    int homogeneous_degree(const MultiIndex& alpha) const {
        return nilcalc::weighted_degree(alpha, weights_);
    }

  private:
    std::string name_;
    std::vector<int> weights_;
    std::vector<BracketTerm> raw_brackets_;
    // Dense (i,j) -> sparse coefficient list, antisymmetry filled in.
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table_;
    int homogeneous_dimension_ = 0;
    int nu_o_ = 1;
    int max_weight_ = 1;
};

/// Group element in exponential coordinates of the first kind.
using RationalPoint = std::vector<Rational>;

inline RationalPoint group_inverse(const RationalPoint& x) {
    RationalPoint y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = -x[j];
    return y;
}

/// Dilation (r^{w_1} x_1, ..., r^{w_n} x_n); requires r > 0 on the numeric
/// path, any rational r on the exact path (group-law identities hold for all
/// rational r).
RationalPoint dilate(const GradedLieAlgebra& algebra, const Rational& r, const RationalPoint& x);
std::vector<double> dilate(const GradedLieAlgebra& algebra, double r, const std::vector<double>& x);

/// Homogeneous norm |x| = (sum_j x_j^{2 nu_o / w_j})^{1/(2 nu_o)}.
double homogeneous_norm(const GradedLieAlgebra& algebra, const std::vector<double>& x);

/// Built-in catalog: "abelian:<n>", "heisenberg:<n>", "engel"; otherwise the
/// argument is treated as a path to a JSON group-spec file.
GradedLieAlgebra catalog_group(const std::string& reference);
GradedLieAlgebra load_group_file(const std::string& path);
bool is_catalog_name(const std::string& reference);

}  // namespace nilcalc
