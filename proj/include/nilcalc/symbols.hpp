#pragma once

#include "nilcalc/dual_basis.hpp"
#include "nilcalc/operators.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilcalc {

/// Symbol of a variable-coefficient left-invariant differential operator:
/// sigma(x, pi) = sum_beta p_beta(x) pi(X)^beta over normal-ordered beta.
/// Read kernel-side, the same data is kappa_x = sum_beta p_beta(x) K_beta
/// where K_beta is the point-supported kernel of X^beta (the functional
/// f -> (-1)^{|beta|} (X^{beta,rev} f)(0)).
class DiffOpSymbol {
  public:
    using TermMap = std::map<MultiIndex, Polynomial>;

    DiffOpSymbol() = default;
    explicit DiffOpSymbol(VarSet vars) : vars_(std::move(vars)) {}

    static DiffOpSymbol identity(const VarSet& vars);
    static DiffOpSymbol monomial(const VarSet& vars, const MultiIndex& beta);
    static DiffOpSymbol term(const Polynomial& p, const MultiIndex& beta);
    static DiffOpSymbol from_operator(const VarCoeffOperator& op);

    VarCoeffOperator to_operator() const;

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const DiffOpSymbol& other) const = default;

    void add_term(const MultiIndex& beta, const Polynomial& p);
    DiffOpSymbol& operator+=(const DiffOpSymbol& other);
    DiffOpSymbol operator+(const DiffOpSymbol& other) const;
    DiffOpSymbol operator-(const DiffOpSymbol& other) const;
    DiffOpSymbol scaled(const Rational& c) const;

    /// max [beta] over nonzero terms; -1 for the zero symbol.  Upper bound
    /// for the calculus order when coefficients and their derivatives stay
    /// bounded (polynomial coefficients are admitted for algebraic testing,
    /// the bound read formally).
    int order(const std::vector<int>& weights) const;

    std::string to_string(const std::vector<int>& weights) const;

  private:
    VarSet vars_;
    TermMap terms_;
};

/// Symbol class tag S^m_{rho,delta}: order plus type bookkeeping with the
/// standard inclusion partial order.
struct SymbolClassTag {
    double m = 0.0;
    double rho = 1.0;
    double delta = 0.0;

    bool valid() const { return 1.0 >= rho && rho >= delta && delta >= 0.0 && delta != 1.0; }
    /// tag1.includes(tag2): every symbol of tag2 belongs to tag1.
    bool includes(const SymbolClassTag& other) const {
        return other.m <= m && other.delta <= delta && other.rho >= rho;
    }
};

/// Seminorm index triple (a, b, c); only the gamma = 0 slice of the
/// operator-norm seminorms has a computable surrogate here (L^1 bounds live
/// in the grid module).
struct SeminormRequest {
    int a = 0;
    int b = 0;
    int c = 0;
};

struct LeibnizTerm {
    MultiIndex alpha1;
    MultiIndex alpha2;
    Rational c;
};

struct KernelTerm {
    Polynomial coefficient;
    MultiIndex beta;
    std::string rendered;  // "p(x) * (-1)^{|beta|} X^beta delta0"
};

/// Difference operators and the composition/adjoint expansions on the
/// differential-operator symbol subclass, exact over the rationals.
class SymbolCalculus {
  public:
    SymbolCalculus(OperatorAlgebra& ops, const DualBasisTable& dual);

    const OperatorAlgebra& ops() const { return *ops_; }
    const GradedLieAlgebra& algebra() const { return ops_->algebra(); }
    const DualBasisTable& dual() const { return *dual_; }
    const VarSet& group_vars() const { return ops_->group_vars(); }

    /// Difference operator Delta^alpha applied termwise.  On a monomial
    /// pi(X)^beta the result is the rational combination of pi(X)^{beta'}
    /// with [beta'] = [beta] - [alpha] determined by the kernel pairing
    /// <q~_alpha K_beta, f> = (-1)^{|beta|} (X^{beta,rev} (q~_alpha f))(0);
    /// zero when [alpha] > [beta].  x-coefficients pass through.
    DiffOpSymbol difference_op(const MultiIndex& alpha, const DiffOpSymbol& sigma);

    /// X^beta_x applied to every coefficient polynomial.
    DiffOpSymbol x_derivative(const MultiIndex& beta, const DiffOpSymbol& sigma) const;

    /// Pointwise operator product: coefficients multiply as polynomials,
    /// pi(X) monomials multiply by normal ordering.
    DiffOpSymbol product(const DiffOpSymbol& s1, const DiffOpSymbol& s2);

    /// Ground truth: compose Op(s1) o Op(s2) and read the symbol back.
    DiffOpSymbol op_compose_direct(const DiffOpSymbol& s1, const DiffOpSymbol& s2);

    /// sum_{[alpha]<=M} Delta^alpha s1 . X^alpha_x s2; terminates and equals
    /// op_compose_direct once M >= order(s1).
    DiffOpSymbol compose_expansion(const DiffOpSymbol& s1, const DiffOpSymbol& s2, int M);

    /// Pointwise adjoint sigma(x,pi)^*: coefficients conjugated (identity on
    /// rationals), monomials reversed and negated, normal-ordered.
    DiffOpSymbol pointwise_adjoint(const DiffOpSymbol& sigma);

    /// sum_{[alpha]<=M} Delta^alpha X^alpha_x sigma^*; equals the direct
    /// adjoint symbol once M >= order(sigma).
    DiffOpSymbol adjoint_expansion(const DiffOpSymbol& sigma, int M);

    /// Symbol of the formal adjoint of Op(sigma).
    DiffOpSymbol direct_adjoint(const DiffOpSymbol& sigma);

    /// Leibniz rule coefficients for Delta^alpha(s1 s2) =
    /// sum c_{a1,a2} Delta^{a1} s1 . Delta^{a2} s2 (the group-law
    /// decomposition coefficients repackaged).
    std::vector<LeibnizTerm> leibniz_coeff_table(const MultiIndex& alpha) const;

    /// Kernel-side rendering kappa_x = sum p_beta(x) (-1)^{|beta|} X^beta
    /// delta0, plus the quantization identity for reports.
    std::vector<KernelTerm> kernel_description(const DiffOpSymbol& sigma) const;
    static std::string quantization_identity();

    /// Kernel functional of pi(X)^beta in coordinates over the functionals
    /// E_gamma(f) = (X^gamma f)(0); exposed for the pairing oracle in tests.
    InvariantOperator kernel_functional(const MultiIndex& beta);
    /// Multiplies a point-supported functional by a polynomial.
    InvariantOperator multiply_functional(const Polynomial& q, const InvariantOperator& u);

  private:
    const InvariantOperator& difference_monomial(const MultiIndex& alpha, const MultiIndex& beta);

    OperatorAlgebra* ops_;
    const DualBasisTable* dual_;
    std::map<std::pair<MultiIndex, MultiIndex>, InvariantOperator> delta_cache_;
};

}  // namespace nilcalc
