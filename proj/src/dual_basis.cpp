#include "nilcalc/dual_basis.hpp"

#include "nilcalc/errors.hpp"

#include <stdexcept>

namespace nilcalc {

DualBasisTable::DualBasisTable(const GroupLawTable& law, int max_degree)
    : law_(&law), max_degree_(max_degree) {
    const auto& algebra = law.algebra();
    const VarSet vx = law.group_vars();

    for (int d = 0; d <= max_degree_; ++d) {
        auto slice = indices_of_degree(algebra.weights(), d);
        const int nd = static_cast<int>(slice.size());

        // A_{beta,gamma} = (X^beta x^gamma)(0); the duality system is
        // A * U = I with q_alpha = sum_gamma U_{gamma,alpha} x^gamma.
        RationalMatrix a(nd, nd);
        for (int col = 0; col < nd; ++col) {
            Polynomial mono = Polynomial::monomial(vx, slice[col], Rational(1));
            for (int row = 0; row < nd; ++row) {
                Polynomial applied = law.apply_left_monomial(slice[row], mono);
                a.at(row, col) = applied.coefficient(MultiIndex(algebra.dim(), 0));
            }
        }
        RationalMatrix rhs(nd, nd);
        for (int i = 0; i < nd; ++i) rhs.at(i, i) = Rational(1);
        auto u = solve_exact(a, rhs);
        if (!u)
            throw InternalConsistencyError("duality system singular at degree " +
                                           std::to_string(d) + " on " + algebra.name());
        for (int col = 0; col < nd; ++col) {
            Polynomial qa(vx);
            for (int row = 0; row < nd; ++row)
                qa.add_term(slice[row], u->at(row, col));
            q_.emplace(slice[col], std::move(qa));
        }
        slices_.emplace(d, std::move(slice));
        pairing_.emplace(d, std::move(a));
    }
}

const Polynomial& DualBasisTable::q(const MultiIndex& alpha) const {
    auto it = q_.find(alpha);
    if (it == q_.end())
        throw std::out_of_range("q_alpha not tabulated for " + index_to_string(alpha) +
                                " (max degree " + std::to_string(max_degree_) + ")");
    return it->second;
}

Polynomial DualBasisTable::q_tilde(const MultiIndex& alpha) const {
    const Polynomial& qa = q(alpha);
    const int n = algebra().dim();
    std::vector<Polynomial> negate(n);
    for (int k = 0; k < n; ++k) negate[k] = -Polynomial::variable(law_->group_vars(), k);
    return qa.substitute(negate);
}

std::vector<DecompositionTerm> DualBasisTable::decomposition(const MultiIndex& alpha) const {
    const auto& algebra = this->algebra();
    const int n = algebra.dim();
    const int d = algebra.homogeneous_degree(alpha);
    const Polynomial qxy = law_->substitute_group_law(q(alpha));
    const VarSet vxy = qxy.vars();

    // c_{a1,a2} = X^{a1}_x X^{a2}_y [q_alpha(x*y)] at (0,0): contract the
    // bihomogeneous coefficient matrix C with the two pairing matrices,
    // c = A_{d1} C A_{d2}^T, staged to stay quadratic per degree split.
    std::vector<DecompositionTerm> out;
    Polynomial reconstructed(vxy);
    for (int d1 = 0; d1 <= d; ++d1) {
        const int d2 = d - d1;
        if (d1 > max_degree_ || d2 > max_degree_)
            throw std::out_of_range("decomposition needs the table built to degree " +
                                    std::to_string(d));
        const auto& s1 = slices_.at(d1);
        const auto& s2 = slices_.at(d2);
        const auto& a1m = pairing_.at(d1);
        const auto& a2m = pairing_.at(d2);
        const int n1 = static_cast<int>(s1.size());
        const int n2 = static_cast<int>(s2.size());

        std::map<MultiIndex, int> pos1, pos2;
        for (int i = 0; i < n1; ++i) pos1.emplace(s1[i], i);
        for (int i = 0; i < n2; ++i) pos2.emplace(s2[i], i);

        // Sparse walk over q_alpha(x*y) fills the bihomogeneous block.
        RationalMatrix c_block(n1, n2);
        for (const auto& [key, coef] : qxy.terms()) {
            MultiIndex g1(n), g2(n);
            for (int v = 0; v < n; ++v) {
                g1[v] = key[v];
                g2[v] = key[n + v];
            }
            if (algebra.homogeneous_degree(g1) != d1) continue;
            c_block.at(pos1.at(g1), pos2.at(g2)) = coef;
        }

        // t = C A2^T, then c = A1 t.
        RationalMatrix t(n1, n2), c(n1, n2);
        for (int g1 = 0; g1 < n1; ++g1)
            for (int i2 = 0; i2 < n2; ++i2) {
                Rational acc(0);
                for (int g2 = 0; g2 < n2; ++g2) {
                    const Rational& v = c_block.at(g1, g2);
                    if (!is_zero(v)) acc += a2m.at(i2, g2) * v;
                }
                t.at(g1, i2) = std::move(acc);
            }
        for (int i1 = 0; i1 < n1; ++i1)
            for (int i2 = 0; i2 < n2; ++i2) {
                Rational acc(0);
                for (int g1 = 0; g1 < n1; ++g1) {
                    const Rational& v = t.at(g1, i2);
                    if (!is_zero(v)) acc += a1m.at(i1, g1) * v;
                }
                c.at(i1, i2) = std::move(acc);
            }

        for (int i1 = 0; i1 < n1; ++i1) {
            for (int i2 = 0; i2 < n2; ++i2) {
                const Rational& coef = c.at(i1, i2);
                if (is_zero(coef)) continue;
                out.push_back({s1[i1], s2[i2], coef});
                reconstructed +=
                    (q(s1[i1]).embedded(vxy, 0) * q(s2[i2]).embedded(vxy, 1)).scaled(coef);
            }
        }
    }
    if (!(reconstructed - qxy).is_zero())
        throw InternalConsistencyError("decomposition residual nonzero for " +
                                       index_to_string(alpha) + " on " + algebra.name());
    return out;
}

Polynomial DualBasisTable::taylor_polynomial(const Polynomial& f, int M) const {
    const auto& algebra = this->algebra();
    if (M > max_degree_)
        throw std::out_of_range("taylor_polynomial needs the table built to degree " +
                                std::to_string(M));
    const VarSet vxz = VarSet::pair("x", "z", algebra.dim());
    Polynomial p(vxz);
    for (int d = 0; d <= M; ++d) {
        for (const auto& alpha : slices_.at(d)) {
            Polynomial xaf = law_->apply_left_monomial(alpha, f);
            if (xaf.is_zero()) continue;
            p += xaf.embedded(vxz, 0) * q(alpha).embedded(vxz, 1);
        }
    }
    return p;
}

Polynomial DualBasisTable::taylor_remainder(const Polynomial& f, int M) const {
    const VarSet vxz = VarSet::pair("x", "z", algebra().dim());
    Polynomial fxz = law_->substitute_group_law(f).relabeled(vxz);
    return fxz - taylor_polynomial(f, M);
}

}  // namespace nilcalc
