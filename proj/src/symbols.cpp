#include "nilcalc/symbols.hpp"

#include "nilcalc/errors.hpp"
#include "nilcalc/linear_solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcalc {

DiffOpSymbol DiffOpSymbol::identity(const VarSet& vars) {
    DiffOpSymbol s(vars);
    s.add_term(MultiIndex(vars.block_dim, 0), Polynomial::constant(vars, Rational(1)));
    return s;
}

DiffOpSymbol DiffOpSymbol::monomial(const VarSet& vars, const MultiIndex& beta) {
    DiffOpSymbol s(vars);
    s.add_term(beta, Polynomial::constant(vars, Rational(1)));
    return s;
}

DiffOpSymbol DiffOpSymbol::term(const Polynomial& p, const MultiIndex& beta) {
    DiffOpSymbol s(p.vars());
    s.add_term(beta, p);
    return s;
}

DiffOpSymbol DiffOpSymbol::from_operator(const VarCoeffOperator& op) {
    DiffOpSymbol s(op.vars());
    for (const auto& [beta, p] : op.terms()) s.add_term(beta, p);
    return s;
}

VarCoeffOperator DiffOpSymbol::to_operator() const {
    VarCoeffOperator op(vars_);
    for (const auto& [beta, p] : terms_) op.add_term(beta, p);
    return op;
}

void DiffOpSymbol::add_term(const MultiIndex& beta, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(beta, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOpSymbol& DiffOpSymbol::operator+=(const DiffOpSymbol& other) {
    if (vars_.block_dim == 0) vars_ = other.vars_;
    for (const auto& [beta, p] : other.terms_) add_term(beta, p);
    return *this;
}

DiffOpSymbol DiffOpSymbol::operator+(const DiffOpSymbol& other) const {
    DiffOpSymbol r = *this;
    r += other;
    return r;
}

DiffOpSymbol DiffOpSymbol::operator-(const DiffOpSymbol& other) const {
    return *this + other.scaled(Rational(-1));
}

DiffOpSymbol DiffOpSymbol::scaled(const Rational& c) const {
    DiffOpSymbol r(vars_);
    if (nilcalc::is_zero(c)) return r;
    for (const auto& [beta, p] : terms_) r.terms_.emplace(beta, p.scaled(c));
    return r;
}

int DiffOpSymbol::order(const std::vector<int>& weights) const {
    int m = -1;
    for (const auto& [beta, p] : terms_)
        m = std::max(m, nilcalc::weighted_degree(beta, weights));
    return m;
}

std::string DiffOpSymbol::to_string(const std::vector<int>& weights) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [beta, p] : terms_) {
        if (!first) out += " + ";
        std::string mono;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "pi(X" + std::to_string(j + 1) + ")";
            if (beta[j] > 1) mono += "^" + std::to_string(beta[j]);
        }
        if (mono.empty()) mono = "Id";
        out += "(" + p.to_string(weights) + ")*" + mono;
        first = false;
    }
    return out;
}

SymbolCalculus::SymbolCalculus(OperatorAlgebra& ops, const DualBasisTable& dual)
    : ops_(&ops), dual_(&dual) {}

InvariantOperator SymbolCalculus::kernel_functional(const MultiIndex& beta) {
    std::vector<int> word = index_to_word(beta);
    std::reverse(word.begin(), word.end());
    const Rational sign((order_of(beta) % 2 == 0) ? 1 : -1);
    return ops_->normal_order(word).scaled(sign);
}

InvariantOperator SymbolCalculus::multiply_functional(const Polynomial& q,
                                                      const InvariantOperator& u) {
    const int n = algebra().dim();
    const MultiIndex origin(n, 0);
    InvariantOperator out(n);
    for (const auto& [gamma, c] : u.terms()) {
        // (q u)(f) picks up u_gamma X^gamma(q f)(0): push X^gamma through the
        // multiplication operator and evaluate the coefficients at 0.
        VarCoeffOperator pushed = ops_->compose(
            VarCoeffOperator::from_invariant(group_vars(), InvariantOperator::monomial(n, gamma, Rational(1))),
            VarCoeffOperator::multiplication(q));
        for (const auto& [w, poly] : pushed.terms()) {
            const Rational at0 = poly.coefficient(origin);
            if (!nilcalc::is_zero(at0)) out.add_term(w, c * at0);
        }
    }
    return out;
}

const InvariantOperator& SymbolCalculus::difference_monomial(const MultiIndex& alpha,
                                                             const MultiIndex& beta) {
    const auto key = std::make_pair(alpha, beta);
    auto it = delta_cache_.find(key);
    if (it != delta_cache_.end()) return it->second;

    const auto& g = algebra();
    const int n = g.dim();
    InvariantOperator result(n);
    const int target_degree = g.homogeneous_degree(beta) - g.homogeneous_degree(alpha);
    if (target_degree >= 0) {
        InvariantOperator target = multiply_functional(dual_->q_tilde(alpha), kernel_functional(beta));
        for (const auto& [gamma, c] : target.terms()) {
            if (g.homogeneous_degree(gamma) != target_degree)
                throw InternalConsistencyError(
                    "difference operator: pairing leaked outside the degree slice on " + g.name());
        }
        const auto& slice = dual_->degree_slice(target_degree);
        const int nd = static_cast<int>(slice.size());
        // Solve sum_{beta'} d_{beta'} K_{beta'} = target in E-coordinates.
        RationalMatrix a(nd, nd), b(nd, 1);
        for (int col = 0; col < nd; ++col) {
            InvariantOperator kb = kernel_functional(slice[col]);
            for (int row = 0; row < nd; ++row) {
                Rational v(0);
                auto f = kb.terms().find(slice[row]);
                if (f != kb.terms().end()) v = f->second;
                a.at(row, col) = v;
            }
        }
        for (int row = 0; row < nd; ++row) {
            auto f = target.terms().find(slice[row]);
            b.at(row, 0) = f == target.terms().end() ? Rational(0) : f->second;
        }
        auto sol = solve_exact(a, b);
        if (!sol)
            throw InternalConsistencyError("difference operator: kernel basis singular on " +
                                           g.name());
        for (int col = 0; col < nd; ++col) result.add_term(slice[col], sol->at(col, 0));
    }
    auto [pos, inserted] = delta_cache_.emplace(key, std::move(result));
    return pos->second;
}

DiffOpSymbol SymbolCalculus::difference_op(const MultiIndex& alpha, const DiffOpSymbol& sigma) {
    DiffOpSymbol out(group_vars());
    for (const auto& [beta, p] : sigma.terms()) {
        const InvariantOperator& dm = difference_monomial(alpha, beta);
        for (const auto& [bp, c] : dm.terms()) out.add_term(bp, p.scaled(c));
    }
    return out;
}

DiffOpSymbol SymbolCalculus::x_derivative(const MultiIndex& beta, const DiffOpSymbol& sigma) const {
    DiffOpSymbol out(group_vars());
    for (const auto& [b, p] : sigma.terms())
        out.add_term(b, ops_->law().apply_left_monomial(beta, p));
    return out;
}

DiffOpSymbol SymbolCalculus::product(const DiffOpSymbol& s1, const DiffOpSymbol& s2) {
    DiffOpSymbol out(group_vars());
    const int n = algebra().dim();
    for (const auto& [b1, p1] : s1.terms()) {
        for (const auto& [b2, p2] : s2.terms()) {
            InvariantOperator prod = ops_->multiply(InvariantOperator::monomial(n, b1, Rational(1)),
                                                    InvariantOperator::monomial(n, b2, Rational(1)));
            const Polynomial coeff = p1 * p2;
            for (const auto& [b, c] : prod.terms()) out.add_term(b, coeff.scaled(c));
        }
    }
    return out;
}

DiffOpSymbol SymbolCalculus::op_compose_direct(const DiffOpSymbol& s1, const DiffOpSymbol& s2) {
    return DiffOpSymbol::from_operator(ops_->compose(s1.to_operator(), s2.to_operator()));
}

DiffOpSymbol SymbolCalculus::compose_expansion(const DiffOpSymbol& s1, const DiffOpSymbol& s2,
                                               int M) {
    if (M < 0) throw std::invalid_argument("compose_expansion: M must be >= 0");
    DiffOpSymbol out(group_vars());
    for (const auto& alpha : indices_up_to_degree(algebra().weights(), M)) {
        DiffOpSymbol left = difference_op(alpha, s1);
        if (left.is_zero()) continue;
        DiffOpSymbol right = x_derivative(alpha, s2);
        if (right.is_zero()) continue;
        out += product(left, right);
    }
    return out;
}

DiffOpSymbol SymbolCalculus::pointwise_adjoint(const DiffOpSymbol& sigma) {
    DiffOpSymbol out(group_vars());
    const int n = algebra().dim();
    for (const auto& [beta, p] : sigma.terms()) {
        InvariantOperator adj =
            ops_->formal_adjoint(InvariantOperator::monomial(n, beta, Rational(1)));
        for (const auto& [b, c] : adj.terms()) out.add_term(b, p.scaled(c));
    }
    return out;
}

DiffOpSymbol SymbolCalculus::adjoint_expansion(const DiffOpSymbol& sigma, int M) {
    if (M < 0) throw std::invalid_argument("adjoint_expansion: M must be >= 0");
    DiffOpSymbol star = pointwise_adjoint(sigma);
    DiffOpSymbol out(group_vars());
    for (const auto& alpha : indices_up_to_degree(algebra().weights(), M))
        out += difference_op(alpha, x_derivative(alpha, star));
    return out;
}

DiffOpSymbol SymbolCalculus::direct_adjoint(const DiffOpSymbol& sigma) {
    return DiffOpSymbol::from_operator(ops_->formal_adjoint(sigma.to_operator()));
}

std::vector<LeibnizTerm> SymbolCalculus::leibniz_coeff_table(const MultiIndex& alpha) const {
    std::vector<LeibnizTerm> out;
    for (const auto& t : dual_->decomposition(alpha)) out.push_back({t.alpha1, t.alpha2, t.c});
    return out;
}

std::vector<KernelTerm> SymbolCalculus::kernel_description(const DiffOpSymbol& sigma) const {
    std::vector<KernelTerm> out;
    for (const auto& [beta, p] : sigma.terms()) {
        KernelTerm term{p, beta, ""};
        std::string mono;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(j + 1);
            if (beta[j] > 1) mono += "^" + std::to_string(beta[j]);
        }
        const int abs = order_of(beta);
        if (abs == 0) {
            term.rendered = "(" + p.to_string(algebra().weights()) + ") * delta0";
        } else {
            term.rendered = "(" + p.to_string(algebra().weights()) + ") * " +
                            (abs % 2 ? std::string("(-1)*") : std::string("")) + mono + " delta0";
        }
        out.push_back(std::move(term));
    }
    return out;
}

std::string SymbolCalculus::quantization_identity() {
    return "T f(x) = (f * kappa_x)(x) = Integral f(y) kappa(x, y^{-1} x) dy";
}

}  // namespace nilcalc
