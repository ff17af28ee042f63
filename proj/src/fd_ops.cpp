#include "nilcalc/fd_ops.hpp"

#include "nilcalc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nilcalc {

namespace {

// First-order coordinate operator sum_k a_k d_k composed with a coordinate
// operator: (sum_k a_k d_k)(b d^g) = sum_k a_k (d_k b) d^g + a_k b d^{g+e_k}.
std::vector<CoordinateOperator::Term> field_compose(
    const std::vector<Polynomial>& field_coeffs,
    const std::vector<CoordinateOperator::Term>& terms) {
    std::vector<CoordinateOperator::Term> out;
    auto add = [&](const MultiIndex& partial, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        for (auto& t : out) {
            if (t.partial == partial) {
                t.coeff += coeff;
                return;
            }
        }
        out.push_back({partial, coeff});
    };
    const int n = static_cast<int>(field_coeffs.size());
    for (const auto& t : terms) {
        for (int k = 0; k < n; ++k) {
            const Polynomial& a = field_coeffs[k];
            if (a.is_zero()) continue;
            add(t.partial, a * t.coeff.derivative(k));
            MultiIndex up = t.partial;
            up[k] += 1;
            add(up, a * t.coeff);
        }
    }
    // Drop exact zeros that survived accumulation.
    std::vector<CoordinateOperator::Term> cleaned;
    for (auto& t : out)
        if (!t.coeff.is_zero()) cleaned.push_back(std::move(t));
    return cleaned;
}

}  // namespace

CoordinateOperator CoordinateOperator::from_operator(const GroupLawTable& law,
                                                     const VarCoeffOperator& op) {
    const int n = law.algebra().dim();
    CoordinateOperator out;
    auto add = [&](const MultiIndex& partial, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        for (auto& t : out.terms_) {
            if (t.partial == partial) {
                t.coeff += coeff;
                return;
            }
        }
        out.terms_.push_back({partial, coeff});
    };
    for (const auto& [beta, p] : op.terms()) {
        std::vector<Term> acc{{MultiIndex(n, 0), Polynomial::constant(law.group_vars(), Rational(1))}};
        auto word = index_to_word(beta);
        for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
            std::vector<Polynomial> coeffs(n);
            for (int k = 0; k < n; ++k) coeffs[k] = law.left_field(word[i])[k];
            acc = field_compose(coeffs, acc);
        }
        for (const auto& t : acc) add(t.partial, p * t.coeff);
    }
    out.terms_.erase(std::remove_if(out.terms_.begin(), out.terms_.end(),
                                    [](const Term& t) { return t.coeff.is_zero(); }),
                     out.terms_.end());
    return out;
}

CoordinateOperator CoordinateOperator::from_invariant(const GroupLawTable& law,
                                                      const InvariantOperator& op) {
    return from_operator(law, VarCoeffOperator::from_invariant(law.group_vars(), op));
}

Polynomial CoordinateOperator::apply(const Polynomial& f) const {
    Polynomial out(f.vars());
    for (const auto& t : terms_) {
        Polynomial g = f;
        for (std::size_t k = 0; k < t.partial.size(); ++k)
            for (int rep = 0; rep < t.partial[k]; ++rep) g = g.derivative(static_cast<int>(k));
        out += t.coeff * g;
    }
    return out;
}

FdOperator::FdOperator(const GroupLawTable& law, const VarCoeffOperator& op, const GridSpec& spec)
    : spec_(spec) {
    build(law, CoordinateOperator::from_operator(law, op));
}

FdOperator::FdOperator(const GroupLawTable& law, const InvariantOperator& op, const GridSpec& spec)
    : spec_(spec) {
    build(law, CoordinateOperator::from_invariant(law, op));
}

void FdOperator::build(const GroupLawTable& law, const CoordinateOperator& op) {
    (void)law;
    const int d = spec_.dim();
    margin_.assign(d, 0);
    for (const auto& t : op.terms()) {
        CompiledTerm ct;
        ct.partial = t.partial;
        // Sample the coefficient unless it is a literal constant.
        const MultiIndex zero(t.coeff.vars().total(), 0);
        const bool is_const_poly =
            t.coeff.terms().size() == 0 ||
            (t.coeff.terms().size() == 1 && t.coeff.terms().begin()->first == zero);
        if (is_const_poly) {
            ct.constant = t.coeff.terms().empty()
                              ? 0.0
                              : to_double(t.coeff.terms().begin()->second);
        } else {
            ct.coeff_samples.resize(spec_.total());
            for (std::size_t i = 0; i < spec_.total(); ++i)
                ct.coeff_samples[i] = t.coeff.evaluate_double(spec_.point_flat(i));
        }
        for (int axis = 0; axis < d; ++axis) {
            // Each second-derivative pass reaches one cell, each first-
            // derivative pass one more.
            const int k = t.partial[axis];
            margin_[axis] = std::max(margin_[axis], (k / 2) + (k % 2));
        }
        terms_.push_back(std::move(ct));
    }
}

namespace {

// In-place sequential centered passes along `axis`: k/2 second-derivative
// passes then one first-derivative pass when k is odd.  Zero extension.
void derivative_passes(const GridSpec& spec, int axis, int k, std::vector<double>& data,
                       std::vector<double>& scratch) {
    if (k == 0) return;
    const int len = spec.npoints[axis];
    std::size_t stride = 1;
    for (int a = axis + 1; a < spec.dim(); ++a) stride *= spec.npoints[a];
    const std::size_t lines = spec.total() / len;
    const double h = spec.spacing(axis);
    const double inv_h2 = 1.0 / (h * h);
    const double inv_2h = 1.0 / (2.0 * h);

    auto run_pass = [&](bool second) {
        parallel_for(lines, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t line = lo; line < hi; ++line) {
                const std::size_t block = line / stride;
                const std::size_t rem = line % stride;
                const std::size_t base = block * stride * len + rem;
                for (int i = 0; i < len; ++i) {
                    const double left = i > 0 ? data[base + (i - 1) * stride] : 0.0;
                    const double right = i + 1 < len ? data[base + (i + 1) * stride] : 0.0;
                    const double mid = data[base + i * stride];
                    scratch[base + i * stride] =
                        second ? (left - 2.0 * mid + right) * inv_h2 : (right - left) * inv_2h;
                }
            }
        });
        data.swap(scratch);
    };

    for (int pass = 0; pass < k / 2; ++pass) run_pass(true);
    if (k % 2) run_pass(false);
}

}  // namespace

GridFunction FdOperator::apply(const GridFunction& f) const {
    GridFunction out(spec_);
    apply_into(f.values(), out.values());
    return out;
}

void FdOperator::apply_into(const std::vector<double>& f, std::vector<double>& out) const {
    const std::size_t n = spec_.total();
    out.assign(n, 0.0);
    std::vector<double> work, scratch(n);
    for (const auto& term : terms_) {
        work = f;
        for (int axis = 0; axis < spec_.dim(); ++axis)
            derivative_passes(spec_, axis, term.partial[axis], work, scratch);
        if (term.coeff_samples.empty()) {
            const double c = term.constant;
            if (c == 0.0) continue;
            parallel_for(n, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) out[i] += c * work[i];
            });
        } else {
            const auto& cs = term.coeff_samples;
            parallel_for(n, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) out[i] += cs[i] * work[i];
            });
        }
    }
}

double FdOperator::gershgorin_estimate() const {
    double total = 0.0;
    for (const auto& term : terms_) {
        double cmax = std::abs(term.constant);
        if (!term.coeff_samples.empty()) {
            cmax = 0.0;
            for (double v : term.coeff_samples) cmax = std::max(cmax, std::abs(v));
        }
        double stencil = 1.0;
        for (int axis = 0; axis < spec_.dim(); ++axis) {
            const int k = term.partial[axis];
            const double h = spec_.spacing(axis);
            for (int pass = 0; pass < k / 2; ++pass) stencil *= 4.0 / (h * h);
            if (k % 2) stencil *= 1.0 / h;
        }
        total += cmax * stencil;
    }
    return total;
}

double interior_max_abs_diff(const GridFunction& a, const GridFunction& b,
                             const std::vector<int>& margin) {
    const GridSpec& spec = a.spec();
    double worst = 0.0;
    for (std::size_t i = 0; i < spec.total(); ++i) {
        auto idx = spec.unflat(i);
        bool interior = true;
        for (int axis = 0; axis < spec.dim(); ++axis) {
            if (idx[axis] < margin[axis] || idx[axis] >= spec.npoints[axis] - margin[axis]) {
                interior = false;
                break;
            }
        }
        if (interior) worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace nilcalc
