#include "nilcalc/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcalc {

InvariantOperator InvariantOperator::identity(int dim) {
    return monomial(dim, MultiIndex(dim, 0), Rational(1));
}

InvariantOperator InvariantOperator::monomial(int dim, const MultiIndex& beta, const Rational& c) {
    InvariantOperator op(dim);
    op.add_term(beta, c);
    return op;
}

InvariantOperator InvariantOperator::generator(int dim, int j) {
    return monomial(dim, unit_index(dim, j), Rational(1));
}

void InvariantOperator::add_term(const MultiIndex& beta, const Rational& c) {
    if (nilcalc::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (nilcalc::is_zero(it->second)) terms_.erase(it);
    }
}

InvariantOperator& InvariantOperator::operator+=(const InvariantOperator& other) {
    if (dim_ == 0) dim_ = other.dim_;
    for (const auto& [beta, c] : other.terms_) add_term(beta, c);
    return *this;
}

InvariantOperator InvariantOperator::operator+(const InvariantOperator& other) const {
    InvariantOperator r = *this;
    r += other;
    return r;
}

InvariantOperator InvariantOperator::operator-(const InvariantOperator& other) const {
    return *this + other.scaled(Rational(-1));
}

InvariantOperator InvariantOperator::scaled(const Rational& c) const {
    InvariantOperator r(dim_);
    if (nilcalc::is_zero(c)) return r;
    for (const auto& [beta, a] : terms_) r.terms_.emplace(beta, a * c);
    return r;
}

std::string InvariantOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [beta, c] : terms_) {
        Rational coef = c;
        if (first) {
            if (coef < 0) {
                out += "-";
                coef = -coef;
            }
        } else {
            out += coef < 0 ? " - " : " + ";
            if (coef < 0) coef = -coef;
        }
        std::string mono;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(j + 1);
            if (beta[j] > 1) mono += "^" + std::to_string(beta[j]);
        }
        if (mono.empty()) mono = "Id";
        if (coef != 1)
            out += rational_to_string(coef) + "*" + mono;
        else
            out += mono;
        first = false;
    }
    return out;
}

VarCoeffOperator VarCoeffOperator::identity(const VarSet& vars) {
    VarCoeffOperator op(vars);
    op.add_term(MultiIndex(vars.block_dim, 0), Polynomial::constant(vars, Rational(1)));
    return op;
}

VarCoeffOperator VarCoeffOperator::from_invariant(const VarSet& vars,
                                                  const InvariantOperator& op) {
    VarCoeffOperator out(vars);
    for (const auto& [beta, c] : op.terms())
        out.add_term(beta, Polynomial::constant(vars, c));
    return out;
}

VarCoeffOperator VarCoeffOperator::multiplication(const Polynomial& p) {
    VarCoeffOperator op(p.vars());
    op.add_term(MultiIndex(p.vars().block_dim, 0), p);
    return op;
}

VarCoeffOperator VarCoeffOperator::term(const Polynomial& p, const MultiIndex& beta) {
    VarCoeffOperator op(p.vars());
    op.add_term(beta, p);
    return op;
}

void VarCoeffOperator::add_term(const MultiIndex& beta, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(beta, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VarCoeffOperator& VarCoeffOperator::operator+=(const VarCoeffOperator& other) {
    if (vars_.block_dim == 0) vars_ = other.vars_;
    for (const auto& [beta, p] : other.terms_) add_term(beta, p);
    return *this;
}

VarCoeffOperator VarCoeffOperator::operator+(const VarCoeffOperator& other) const {
    VarCoeffOperator r = *this;
    r += other;
    return r;
}

VarCoeffOperator VarCoeffOperator::operator-(const VarCoeffOperator& other) const {
    return *this + other.scaled(Rational(-1));
}

VarCoeffOperator VarCoeffOperator::scaled(const Rational& c) const {
    VarCoeffOperator r(vars_);
    if (nilcalc::is_zero(c)) return r;
    for (const auto& [beta, p] : terms_) r.terms_.emplace(beta, p.scaled(c));
    return r;
}

VarCoeffOperator VarCoeffOperator::left_multiplied(const Polynomial& p) const {
    VarCoeffOperator r(vars_);
    for (const auto& [beta, q] : terms_) r.add_term(beta, p * q);
    return r;
}

std::string VarCoeffOperator::to_string(const std::vector<int>& weights) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [beta, p] : terms_) {
        if (!first) out += " + ";
        std::string mono;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(j + 1);
            if (beta[j] > 1) mono += "^" + std::to_string(beta[j]);
        }
        if (mono.empty()) mono = "Id";
        out += "(" + p.to_string(weights) + ")*" + mono;
        first = false;
    }
    return out;
}

OperatorAlgebra::OperatorAlgebra(const GroupLawTable& law) : law_(&law) {}

const InvariantOperator& OperatorAlgebra::normal_order(const std::vector<int>& word) {
    auto it = pbw_cache_.find(word);
    if (it != pbw_cache_.end()) return it->second;

    const int n = algebra().dim();
    InvariantOperator result(n);
    int swap_at = -1;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] > word[i + 1]) {
            swap_at = static_cast<int>(i);
            break;
        }
    }
    if (swap_at < 0) {
        MultiIndex beta(n, 0);
        for (int j : word) beta[j] += 1;
        result = InvariantOperator::monomial(n, beta, Rational(1));
    } else {
        // X_i X_j = X_j X_i + [X_i, X_j]; the bracket correction has one
        // fewer letter, so the rewriting terminates.
        std::vector<int> swapped = word;
        std::swap(swapped[swap_at], swapped[swap_at + 1]);
        result = normal_order(swapped);
        const int i = word[swap_at];
        const int j = word[swap_at + 1];
        for (const auto& [k, c] : algebra().bracket(i, j)) {
            std::vector<int> shorter;
            shorter.reserve(word.size() - 1);
            shorter.insert(shorter.end(), word.begin(), word.begin() + swap_at);
            shorter.push_back(k);
            shorter.insert(shorter.end(), word.begin() + swap_at + 2, word.end());
            result += normal_order(shorter).scaled(c);
        }
    }
    auto [pos, inserted] = pbw_cache_.emplace(word, std::move(result));
    return pos->second;
}

InvariantOperator OperatorAlgebra::multiply(const InvariantOperator& a,
                                            const InvariantOperator& b) {
    InvariantOperator out(algebra().dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            std::vector<int> word = index_to_word(ba);
            std::vector<int> wb = index_to_word(bb);
            word.insert(word.end(), wb.begin(), wb.end());
            out += normal_order(word).scaled(ca * cb);
        }
    }
    return out;
}

VarCoeffOperator OperatorAlgebra::compose(const VarCoeffOperator& a, const VarCoeffOperator& b) {
    const VarSet& vars = law_->group_vars();
    // One generator at a time: X_j o (r X^w) = (X_j r) X^w + r (X_j X^w).
    auto gen_compose = [&](int j, const VarCoeffOperator& op) {
        VarCoeffOperator out(vars);
        for (const auto& [beta, r] : op.terms()) {
            out.add_term(beta, law_->apply_left_field(j, r));
            std::vector<int> word;
            word.push_back(j);
            auto wb = index_to_word(beta);
            word.insert(word.end(), wb.begin(), wb.end());
            const InvariantOperator& no = normal_order(word);
            for (const auto& [nb, nc] : no.terms()) out.add_term(nb, r.scaled(nc));
        }
        return out;
    };

    VarCoeffOperator result(vars);
    for (const auto& [beta, p] : a.terms()) {
        VarCoeffOperator cur = b;
        auto word = index_to_word(beta);
        for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
            cur = gen_compose(word[i], cur);
        result += cur.left_multiplied(p);
    }
    return result;
}

Polynomial OperatorAlgebra::apply(const VarCoeffOperator& a, const Polynomial& f) const {
    Polynomial out(law_->group_vars());
    for (const auto& [beta, p] : a.terms()) out += p * law_->apply_left_monomial(beta, f);
    return out;
}

Polynomial OperatorAlgebra::apply(const InvariantOperator& a, const Polynomial& f) const {
    Polynomial out(law_->group_vars());
    for (const auto& [beta, c] : a.terms()) out += law_->apply_left_monomial(beta, f).scaled(c);
    return out;
}

VarCoeffOperator OperatorAlgebra::formal_adjoint(const VarCoeffOperator& a) {
    const VarSet& vars = law_->group_vars();
    VarCoeffOperator result(vars);
    for (const auto& [beta, p] : a.terms()) {
        // (p X^beta)^* = (X^beta)^* o (conj(p) Id); coefficients are rational,
        // conjugation is the identity.
        std::vector<int> word = index_to_word(beta);
        std::reverse(word.begin(), word.end());
        const Rational sign((order_of(beta) % 2 == 0) ? 1 : -1);
        VarCoeffOperator rev =
            VarCoeffOperator::from_invariant(vars, normal_order(word).scaled(sign));
        result += compose(rev, VarCoeffOperator::multiplication(p));
    }
    return result;
}

InvariantOperator OperatorAlgebra::formal_adjoint(const InvariantOperator& a) {
    InvariantOperator result(algebra().dim());
    for (const auto& [beta, c] : a.terms()) {
        std::vector<int> word = index_to_word(beta);
        std::reverse(word.begin(), word.end());
        const Rational sign((order_of(beta) % 2 == 0) ? 1 : -1);
        result += normal_order(word).scaled(sign * c);
    }
    return result;
}

std::optional<int> OperatorAlgebra::order(const VarCoeffOperator& a) const {
    if (a.is_zero()) return std::nullopt;
    int m = 0;
    for (const auto& [beta, p] : a.terms())
        m = std::max(m, algebra().homogeneous_degree(beta));
    return m;
}

std::optional<int> OperatorAlgebra::order(const InvariantOperator& a) const {
    if (a.is_zero()) return std::nullopt;
    int m = 0;
    for (const auto& [beta, c] : a.terms())
        m = std::max(m, algebra().homogeneous_degree(beta));
    return m;
}

std::optional<int> OperatorAlgebra::homogeneous_degree(const VarCoeffOperator& a) const {
    if (a.is_zero()) return std::nullopt;
    std::optional<int> degree;
    for (const auto& [beta, p] : a.terms()) {
        const int pd = p.weighted_degree(algebra().weights());
        if (!p.is_homogeneous(algebra().weights(), pd)) return std::nullopt;
        const int d = algebra().homogeneous_degree(beta) - pd;
        if (degree && *degree != d) return std::nullopt;
        degree = d;
    }
    return degree;
}

std::optional<int> OperatorAlgebra::homogeneous_degree(const InvariantOperator& a) const {
    if (a.is_zero()) return std::nullopt;
    std::optional<int> degree;
    for (const auto& [beta, c] : a.terms()) {
        const int d = algebra().homogeneous_degree(beta);
        if (degree && *degree != d) return std::nullopt;
        degree = d;
    }
    return degree;
}

RocklandSpec OperatorAlgebra::rockland(RocklandVariant variant, int nu_o,
                                       const std::vector<Rational>& coeffs) {
    const auto& g = algebra();
    const int n = g.dim();
    std::vector<Rational> c = coeffs;
    if (c.empty()) c.assign(n, Rational(1));
    if (static_cast<int>(c.size()) != n)
        throw std::domain_error("rockland: need one coefficient per generator");
    for (const auto& cj : c)
        if (cj <= 0) throw std::domain_error("rockland: coefficients must be positive");

    RocklandSpec spec;
    spec.variant = variant;
    InvariantOperator op(n);
    if (variant == RocklandVariant::SubLaplacian) {
        bool any = false;
        for (int j = 0; j < n; ++j) {
            if (g.weights()[j] != 1) continue;
            any = true;
            op += InvariantOperator::monomial(n, [&] {
                      MultiIndex b(n, 0);
                      b[j] = 2;
                      return b;
                  }(),
                  Rational(-1) * c[j]);
        }
        if (!any)
            throw std::domain_error("sub-Laplacian needs a weight-1 layer on " + g.name());
        spec.degree = 2;
    } else {
        for (int j = 0; j < n; ++j)
            if (nu_o % g.weights()[j] != 0)
                throw std::domain_error("nu_o must be a common multiple of the weights");
        const int mult = variant == RocklandVariant::Alternating ? 2 : 4;
        for (int j = 0; j < n; ++j) {
            const int power = mult * nu_o / g.weights()[j];
            Rational sign(1);
            if (variant == RocklandVariant::Alternating && (nu_o / g.weights()[j]) % 2 == 1)
                sign = Rational(-1);
            MultiIndex b(n, 0);
            b[j] = power;
            op += InvariantOperator::monomial(n, b, sign * c[j]);
        }
        spec.degree = mult * nu_o;
    }
    spec.op = op;
    return spec;
}

}  // namespace nilcalc
