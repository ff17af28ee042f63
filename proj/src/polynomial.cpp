#include "nilcalc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcalc {

std::string VarSet::variable_name(int flat_index) const {
    const int block = flat_index / block_dim;
    const int coord = flat_index % block_dim;
    return blocks[block] + std::to_string(coord + 1);
}

Polynomial Polynomial::constant(const VarSet& vars, const Rational& c) {
    Polynomial p(vars);
    if (!nilcalc::is_zero(c)) p.terms_.emplace(MultiIndex(vars.total(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const VarSet& vars, int flat_index) {
    Polynomial p(vars);
    MultiIndex e(vars.total(), 0);
    e.at(flat_index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const VarSet& vars, const MultiIndex& alpha, const Rational& c) {
    Polynomial p(vars);
    if (static_cast<int>(alpha.size()) != vars.total())
        throw std::invalid_argument("monomial exponent length mismatch");
    if (!nilcalc::is_zero(c)) p.terms_.emplace(alpha, c);
    return p;
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
    if (nilcalc::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (nilcalc::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (vars_ != other.vars_) {
        if (terms_.empty()) {
            vars_ = other.vars_;
        } else if (!other.terms_.empty()) {
            throw std::invalid_argument("polynomial variable sets differ");
        }
    }
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    *this += -other;
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (nilcalc::is_zero(c)) return r;
    for (const auto& [alpha, a] : terms_) r.terms_.emplace(alpha, a * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (vars_ != other.vars_ && !terms_.empty() && !other.terms_.empty())
        throw std::invalid_argument("polynomial variable sets differ");
    Polynomial r(terms_.empty() ? other.vars_ : vars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) r.add_term(add_indices(a, b), ca * cb);
    return r;
}

Polynomial Polynomial::derivative(int flat_index) const {
    Polynomial r(vars_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[flat_index] == 0) continue;
        MultiIndex beta = alpha;
        beta[flat_index] -= 1;
        r.add_term(beta, c * Rational(alpha[flat_index]));
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != vars_.total())
        throw std::invalid_argument("substitute: wrong number of images");
    VarSet target = images.empty() ? vars_ : images.front().vars();
    Polynomial result(target);
    // Power cache per variable keeps repeated exponents cheap.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](int v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    for (const auto& [alpha, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < alpha.size(); ++v)
            if (alpha[v] > 0) term = term * power_of(static_cast<int>(v), alpha[v]);
        result += term;
    }
    return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational total(0);
    for (const auto& [alpha, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < alpha.size(); ++v)
            if (alpha[v] > 0) t *= rational_pow(point[v], static_cast<unsigned>(alpha[v]));
        total += t;
    }
    return total;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
    double total = 0.0;
    for (const auto& [alpha, c] : terms_) {
        double t = to_double(c);
        for (std::size_t v = 0; v < alpha.size(); ++v)
            for (int k = 0; k < alpha[v]; ++k) t *= point[v];
        total += t;
    }
    return total;
}

int Polynomial::term_weighted_degree(const MultiIndex& alpha, const std::vector<int>& weights) {
    int d = 0;
    const int n = static_cast<int>(weights.size());
    for (std::size_t v = 0; v < alpha.size(); ++v)
        d += weights[static_cast<int>(v) % n] * alpha[v];
    return d;
}

int Polynomial::weighted_degree(const std::vector<int>& weights) const {
    int d = -1;
    for (const auto& [alpha, c] : terms_)
        d = std::max(d, term_weighted_degree(alpha, weights));
    return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights, int degree) const {
    for (const auto& [alpha, c] : terms_)
        if (term_weighted_degree(alpha, weights) != degree) return false;
    return true;
}

Polynomial Polynomial::homogeneous_part(const std::vector<int>& weights, int d) const {
    Polynomial r(vars_);
    for (const auto& [alpha, c] : terms_)
        if (term_weighted_degree(alpha, weights) == d) r.terms_.emplace(alpha, c);
    return r;
}

Polynomial Polynomial::relabeled(const VarSet& target) const {
    if (target.total() != vars_.total())
        throw std::invalid_argument("relabeled: variable layout mismatch");
    Polynomial r(target);
    for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, c);
    return r;
}

Polynomial Polynomial::embedded(const VarSet& target, int block) const {
    if (static_cast<int>(vars_.blocks.size()) != 1 || vars_.block_dim != target.block_dim)
        throw std::invalid_argument("embedded: expects a single-block polynomial");
    const int n = target.block_dim;
    Polynomial r(target);
    for (const auto& [alpha, c] : terms_) {
        MultiIndex beta(target.total(), 0);
        for (int v = 0; v < n; ++v) beta[block * n + v] = alpha[v];
        r.terms_.emplace(std::move(beta), c);
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<int>& weights) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        const int da = term_weighted_degree(a->first, weights);
        const int db = term_weighted_degree(b->first, weights);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [alpha, c] = *t;
        std::string mono;
        for (std::size_t v = 0; v < alpha.size(); ++v) {
            if (alpha[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_.variable_name(static_cast<int>(v));
            if (alpha[v] > 1) mono += "^" + std::to_string(alpha[v]);
        }
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
        if (mono.empty()) {
            out += rational_to_string(coef);
        } else {
            if (coef != 1) out += rational_to_string(coef) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

}  // namespace nilcalc
