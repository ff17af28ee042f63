#pragma once

#include "nilcalc/dual_basis.hpp"
#include "nilcalc/group_law.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilcalc {

/// Element of the enveloping algebra in the ordered (PBW) monomial basis:
/// finite rational combination of X^beta = X_1^{b_1} ... X_n^{b_n}.
class InvariantOperator {
  public:
    using TermMap = std::map<MultiIndex, Rational>;

    InvariantOperator() = default;
    explicit InvariantOperator(int dim) : dim_(dim) {}

    static InvariantOperator identity(int dim);
    static InvariantOperator monomial(int dim, const MultiIndex& beta, const Rational& c);
    static InvariantOperator generator(int dim, int j);

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const InvariantOperator& other) const = default;

    void add_term(const MultiIndex& beta, const Rational& c);
    InvariantOperator& operator+=(const InvariantOperator& other);
    InvariantOperator operator+(const InvariantOperator& other) const;
    InvariantOperator operator-(const InvariantOperator& other) const;
    InvariantOperator scaled(const Rational& c) const;

    std::string to_string() const;

  private:
    int dim_ = 0;
    TermMap terms_;
};

/// Variable-coefficient operator sum_beta p_beta(x) X^beta, coefficients
/// attached to normal-ordered monomials only.
class VarCoeffOperator {
  public:
    using TermMap = std::map<MultiIndex, Polynomial>;

    VarCoeffOperator() = default;
    explicit VarCoeffOperator(VarSet vars) : vars_(std::move(vars)) {}

    static VarCoeffOperator identity(const VarSet& vars);
    static VarCoeffOperator from_invariant(const VarSet& vars, const InvariantOperator& op);
    static VarCoeffOperator multiplication(const Polynomial& p);
    static VarCoeffOperator term(const Polynomial& p, const MultiIndex& beta);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const VarCoeffOperator& other) const = default;

    void add_term(const MultiIndex& beta, const Polynomial& p);
    VarCoeffOperator& operator+=(const VarCoeffOperator& other);
    VarCoeffOperator operator+(const VarCoeffOperator& other) const;
    VarCoeffOperator operator-(const VarCoeffOperator& other) const;
    VarCoeffOperator scaled(const Rational& c) const;
    /// Left multiplication by a polynomial: p * (sum q_b X^b).
    VarCoeffOperator left_multiplied(const Polynomial& p) const;

    std::string to_string(const std::vector<int>& weights) const;

  private:
    VarSet vars_;
    TermMap terms_;
};

/// Provenance of a Rockland-operator construction.
enum class RocklandVariant { SubLaplacian, Alternating, Quartic };

struct RocklandSpec {
    InvariantOperator op;
    int degree = 0;  // homogeneous degree nu
    RocklandVariant variant = RocklandVariant::SubLaplacian;
};

/// PBW rewriting, composition, application, adjoints and the Rockland
/// catalog for one fixed group.  Holds a memo table for normal ordering, so
/// share one instance per algebra.
class OperatorAlgebra {
  public:
    explicit OperatorAlgebra(const GroupLawTable& law);

    const GroupLawTable& law() const { return *law_; }
    const GradedLieAlgebra& algebra() const { return law_->algebra(); }
    const VarSet& group_vars() const { return law_->group_vars(); }

    /// Rewrites the word X_{w_0} X_{w_1} ... (0-based generator indices) into
    /// the ordered basis using the bracket relations.
    const InvariantOperator& normal_order(const std::vector<int>& word);

    /// Product of two enveloping-algebra elements.
    InvariantOperator multiply(const InvariantOperator& a, const InvariantOperator& b);

    /// Canonical composition a after b.
    VarCoeffOperator compose(const VarCoeffOperator& a, const VarCoeffOperator& b);

    /// Exact action on a polynomial.
    Polynomial apply(const VarCoeffOperator& a, const Polynomial& f) const;
    Polynomial apply(const InvariantOperator& a, const Polynomial& f) const;

    /// Formal adjoint for the L^2(Haar) pairing; generators are skew-adjoint.
    VarCoeffOperator formal_adjoint(const VarCoeffOperator& a);
    /// Adjoint of an invariant operator: reverse and negate each word.
    InvariantOperator formal_adjoint(const InvariantOperator& a);

    /// max [beta] over nonzero terms; nullopt for the zero operator.
    std::optional<int> order(const VarCoeffOperator& a) const;
    std::optional<int> order(const InvariantOperator& a) const;
    /// Dilation-covariance degree: the common value of [beta] - deg(p_beta)
    /// when every coefficient is homogeneous and the value is shared;
    /// nullopt flags mixed homogeneity.
    std::optional<int> homogeneous_degree(const VarCoeffOperator& a) const;
    std::optional<int> homogeneous_degree(const InvariantOperator& a) const;

    /// Rockland catalog.  `variant` Alternating builds
    /// sum_j (-1)^{nu_o/w_j} c_j X_j^{2 nu_o/w_j} of degree 2 nu_o,
    /// Quartic builds sum_j c_j X_j^{4 nu_o/w_j} of degree 4 nu_o;
    /// SubLaplacian builds -sum_{w_j=1} X_j^2 of degree 2.
    RocklandSpec rockland(RocklandVariant variant, int nu_o,
                          const std::vector<Rational>& coeffs = {});

  private:
    const GroupLawTable* law_;
    std::map<std::vector<int>, InvariantOperator> pbw_cache_;
};

}  // namespace nilcalc
