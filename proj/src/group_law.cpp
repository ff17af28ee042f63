#include "nilcalc/group_law.hpp"

#include <stdexcept>

namespace nilcalc {

namespace {

using PolyVec = std::vector<Polynomial>;

PolyVec bracket_poly_vectors(const GradedLieAlgebra& algebra, const PolyVec& a, const PolyVec& b) {
    const int n = algebra.dim();
    PolyVec out(n, Polynomial(a.front().vars()));
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            for (const auto& [k, c] : algebra.bracket(i, j)) out[k] += (a[i] * b[j]).scaled(c);
        }
    }
    return out;
}

bool all_zero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

// Right-nested bracket [w_0, [w_1, [..., [w_{m-2}, w_{m-1}]...]]] of a word
// over the two letters {0 -> X, 1 -> Y}.
PolyVec nested_bracket(const GradedLieAlgebra& algebra, const std::vector<int>& word,
                       const PolyVec& x, const PolyVec& y) {
    PolyVec acc = word.back() == 0 ? x : y;
    for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) {
        acc = bracket_poly_vectors(algebra, word[i] == 0 ? x : y, acc);
        if (all_zero(acc)) break;
    }
    return acc;
}

void add_scaled(PolyVec& acc, const PolyVec& term, const Rational& c) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += term[k].scaled(c);
}

// Enumerates block sequences ((r_1,s_1),...,(r_n,s_n)), r_i+s_i >= 1, with a
// bound on the total number of letters, and accumulates the Dynkin terms.
void dynkin_blocks(const GradedLieAlgebra& algebra, const PolyVec& x, const PolyVec& y,
                   int max_len, std::vector<int>& word, int blocks, Rational factorial_prod,
                   PolyVec& acc) {
    if (!word.empty()) {
        const int m = static_cast<int>(word.size());
        // Innermost [X,X] or [Y,Y] vanishes.
        if (m < 2 || word[m - 1] != word[m - 2]) {
            Rational coeff = Rational((blocks % 2 == 1) ? 1 : -1) /
                             (Rational(blocks) * Rational(m) * factorial_prod);
            PolyVec term = nested_bracket(algebra, word, x, y);
            add_scaled(acc, term, coeff);
        }
    }
    const int used = static_cast<int>(word.size());
    for (int r = 0; r <= max_len - used; ++r) {
        for (int s = 0; r + s <= max_len - used; ++s) {
            if (r + s == 0) continue;
            Rational f = factorial_prod * factorial(static_cast<unsigned>(r)) *
                         factorial(static_cast<unsigned>(s));
            for (int t = 0; t < r; ++t) word.push_back(0);
            for (int t = 0; t < s; ++t) word.push_back(1);
            dynkin_blocks(algebra, x, y, max_len, word, blocks + 1, f, acc);
            word.resize(used);
        }
    }
}

}  // namespace

std::vector<Polynomial> dynkin_series(const GradedLieAlgebra& algebra,
                                      const std::vector<Polynomial>& x,
                                      const std::vector<Polynomial>& y, int max_word_length) {
    PolyVec acc(algebra.dim(), Polynomial(x.front().vars()));
    std::vector<int> word;
    dynkin_blocks(algebra, x, y, max_word_length, word, 0, Rational(1), acc);
    return acc;
}

GroupLawTable::GroupLawTable(const GradedLieAlgebra& algebra)
    : algebra_(&algebra),
      vars_x_(VarSet::single("x", algebra.dim())),
      vars_xy_(VarSet::pair("x", "y", algebra.dim())) {
    const int n = algebra.dim();
    PolyVec xv(n), yv(n);
    for (int k = 0; k < n; ++k) {
        xv[k] = Polynomial::variable(vars_xy_, k);
        yv[k] = Polynomial::variable(vars_xy_, n + k);
    }
    product_ = dynkin_series(algebra, xv, yv, algebra.max_weight());

    // Left-invariant fields: a_{jk}(x) = d(x*y)_k / dy_j at y = 0.
    // Right-invariant fields: d(y*x)_k / dy_j at y = 0.
    left_fields_.assign(n, PolyVec(n, Polynomial(vars_x_)));
    right_fields_.assign(n, PolyVec(n, Polynomial(vars_x_)));
    std::vector<Polynomial> restrict_y0(2 * n);   // (x,y) -> (x,0)
    std::vector<Polynomial> swap_restrict(2 * n); // (x,y) -> (y=x_var, x=0) for y*x
    for (int k = 0; k < n; ++k) {
        restrict_y0[k] = Polynomial::variable(vars_x_, k);
        restrict_y0[n + k] = Polynomial(vars_x_);
        swap_restrict[k] = Polynomial(vars_x_);
        swap_restrict[n + k] = Polynomial::variable(vars_x_, k);
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            left_fields_[j][k] = product_[k].derivative(n + j).substitute(restrict_y0);
            // (y*x)_k with first slot y: differentiate in the first block and
            // then send the first block to 0, second block to x.
            right_fields_[j][k] = product_[k].derivative(j).substitute(swap_restrict);
        }
    }
}

RationalPoint GroupLawTable::product(const RationalPoint& x, const RationalPoint& y) const {
    const int n = algebra_->dim();
    std::vector<Rational> point(2 * n);
    for (int k = 0; k < n; ++k) {
        point[k] = x[k];
        point[n + k] = y[k];
    }
    RationalPoint out(n);
    for (int k = 0; k < n; ++k) out[k] = product_[k].evaluate(point);
    return out;
}

std::vector<double> GroupLawTable::product(const std::vector<double>& x,
                                           const std::vector<double>& y) const {
    const int n = algebra_->dim();
    std::vector<double> point(2 * n);
    for (int k = 0; k < n; ++k) {
        point[k] = x[k];
        point[n + k] = y[k];
    }
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) out[k] = product_[k].evaluate_double(point);
    return out;
}

Polynomial GroupLawTable::substitute_group_law(const Polynomial& p) const {
    if (!(p.vars() == vars_x_)) throw std::invalid_argument("expected a polynomial in x");
    std::vector<Polynomial> images(algebra_->dim());
    for (int k = 0; k < algebra_->dim(); ++k) images[k] = product_[k];
    return p.substitute(images);
}

Polynomial GroupLawTable::substitute_left_translation(const Polynomial& p) const {
    if (!(p.vars() == vars_x_)) throw std::invalid_argument("expected a polynomial in x");
    const int n = algebra_->dim();
    // p(y*x): plug the group-law polynomials with the blocks swapped, i.e.
    // first slot <- y-variables, second slot <- x-variables.
    std::vector<Polynomial> swap(2 * n);
    for (int k = 0; k < n; ++k) {
        swap[k] = Polynomial::variable(vars_xy_, n + k);
        swap[n + k] = Polynomial::variable(vars_xy_, k);
    }
    std::vector<Polynomial> images(n);
    for (int k = 0; k < n; ++k) images[k] = product_[k].substitute(swap);
    return p.substitute(images);
}

Polynomial GroupLawTable::apply_left_field(int j, const Polynomial& p) const {
    Polynomial out(vars_x_);
    for (int k = 0; k < algebra_->dim(); ++k) {
        if (left_fields_[j][k].is_zero()) continue;
        out += left_fields_[j][k] * p.derivative(k);
    }
    return out;
}

Polynomial GroupLawTable::apply_right_field(int j, const Polynomial& p) const {
    Polynomial out(vars_x_);
    for (int k = 0; k < algebra_->dim(); ++k) {
        if (right_fields_[j][k].is_zero()) continue;
        out += right_fields_[j][k] * p.derivative(k);
    }
    return out;
}

Polynomial GroupLawTable::apply_left_word(const std::vector<int>& word, const Polynomial& p) const {
    Polynomial out = p;
    for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
        out = apply_left_field(word[i], out);
    return out;
}

Polynomial GroupLawTable::apply_left_monomial(const MultiIndex& beta, const Polynomial& p) const {
    return apply_left_word(index_to_word(beta), p);
}

}  // namespace nilcalc
