#pragma once

#include "nilcalc/multi_index.hpp"
#include "nilcalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilcalc {

/// Variable layout of a polynomial: one or more named blocks ("x", "y", ...),
/// each holding `block_dim` coordinates.  Polynomials on the group use a
/// single block; group-law substitution produces two-block polynomials.
struct VarSet {
    std::vector<std::string> blocks;
    int block_dim = 0;

    int total() const { return static_cast<int>(blocks.size()) * block_dim; }
    bool operator==(const VarSet& other) const = default;

    static VarSet single(const std::string& name, int dim) { return {{name}, dim}; }
    static VarSet pair(const std::string& a, const std::string& b, int dim) {
        return {{a, b}, dim};
    }
    std::string variable_name(int flat_index) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Exponent keys are flat vectors over all blocks; zero coefficients are
/// never stored.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, Rational>;

    Polynomial() = default;
    explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const VarSet& vars, const Rational& c);
    /// The coordinate function of variable `flat_index`.
    static Polynomial variable(const VarSet& vars, int flat_index);
    /// Monomial c * v^alpha, alpha a flat exponent vector.
    static Polynomial monomial(const VarSet& vars, const MultiIndex& alpha, const Rational& c);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Polynomial& other) const = default;

    Rational coefficient(const MultiIndex& alpha) const;
    void add_term(const MultiIndex& alpha, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    /// d/dv of the flat variable `flat_index`.
    Polynomial derivative(int flat_index) const;

    /// Substitutes each variable by the given polynomial (all over a common
    /// target VarSet).  `images.size()` must equal vars().total().
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate_double(const std::vector<double>& point) const;

    /// Weighted total degree of a term: weights are per-coordinate within a
    /// block and repeat across blocks.
    static int term_weighted_degree(const MultiIndex& alpha, const std::vector<int>& weights);
    /// Max weighted degree over nonzero terms (-1 for the zero polynomial).
    int weighted_degree(const std::vector<int>& weights) const;
    bool is_homogeneous(const std::vector<int>& weights, int degree) const;
    /// The part of weighted degree exactly d.
    Polynomial homogeneous_part(const std::vector<int>& weights, int d) const;

    /// Same terms over a renamed variable set of identical layout.
    Polynomial relabeled(const VarSet& target) const;

    /// Embeds a single-block polynomial into `target` at block position
    /// `block`; other blocks do not appear.
    Polynomial embedded(const VarSet& target, int block) const;

    /// Canonical printing: graded-lex term order (ascending weighted degree,
    /// then lex), rationals as "p/q".
    std::string to_string(const std::vector<int>& weights) const;

  private:
    VarSet vars_;
    TermMap terms_;
};

}  // namespace nilcalc
