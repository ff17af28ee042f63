#include "nilcalc/dual_basis.hpp"
#include "nilcalc/errors.hpp"
#include "nilcalc/group_law.hpp"

#include "oracle_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nilcalc;

namespace {

struct Fixture {
    GradedLieAlgebra algebra;
    GroupLawTable law;
    explicit Fixture(const std::string& name) : algebra(catalog_group(name)), law(algebra) {}
};

}  // namespace

TEST_CASE("group law substitution") {
    Fixture f("heisenberg:1");
    const VarSet vx = f.law.group_vars();

    Polynomial c = Polynomial::constant(vx, Rational(7, 3));
    CHECK(f.law.substitute_group_law(c).coefficient(MultiIndex(6, 0)) == Rational(7, 3));

    Polynomial x3 = Polynomial::variable(vx, 2);
    Polynomial sub = f.law.substitute_group_law(x3);
    CHECK(sub == f.law.coordinate(2));

    Fixture ab("abelian:2");
    Polynomial x1 = Polynomial::variable(ab.law.group_vars(), 0);
    Polynomial s = ab.law.substitute_group_law(x1);
    // x1 + y1
    CHECK(s.coefficient({1, 0, 0, 0}) == 1);
    CHECK(s.coefficient({0, 0, 1, 0}) == 1);
    CHECK(s.terms().size() == 2);
}

TEST_CASE("left-invariant fields on the catalog") {
    Fixture ab("abelian:3");
    for (int j = 0; j < 3; ++j) {
        // Plain partial derivative.
        for (int k = 0; k < 3; ++k) {
            const Polynomial& a = ab.law.left_field(j)[k];
            if (k == j)
                CHECK(a == Polynomial::constant(ab.law.group_vars(), Rational(1)));
            else
                CHECK(a.is_zero());
        }
    }

    Fixture h("heisenberg:1");
    const VarSet vx = h.law.group_vars();
    // X1 = d1 - (x2/2) d3, X2 = d2 + (x1/2) d3, X3 = d3.
    CHECK(h.law.left_field(0)[0] == Polynomial::constant(vx, Rational(1)));
    CHECK(h.law.left_field(0)[2] == Polynomial::variable(vx, 1).scaled(Rational(-1, 2)));
    CHECK(h.law.left_field(1)[2] == Polynomial::variable(vx, 0).scaled(Rational(1, 2)));
    CHECK(h.law.left_field(2)[2] == Polynomial::constant(vx, Rational(1)));

    // Right-invariant fields differ by the sign of the twist term.
    CHECK(h.law.right_field(0)[2] == Polynomial::variable(vx, 1).scaled(Rational(1, 2)));
    CHECK(h.law.right_field(0)[0] == Polynomial::constant(vx, Rational(1)));
}

TEST_CASE("left invariance of the fields") {
    // X_j (f o L_g) = (X_j f) o L_g with L_g x = g*x, checked symbolically:
    // substitute_left_translation realizes f(y*x) with y the new left slot.
    Fixture h("heisenberg:1");
    const VarSet vx = h.law.group_vars();
    Polynomial f = Polynomial::variable(vx, 2) * Polynomial::variable(vx, 0) +
                   Polynomial::variable(vx, 1).scaled(Rational(3));
    for (int j = 0; j < 3; ++j) {
        Polynomial xf = h.law.apply_left_field(j, f);
        Polynomial lhs = h.law.substitute_left_translation(xf);
        // Differentiate f(y*x) in the x-block (block 0) with the field
        // coefficients pulled back to the two-block ring.
        Polynomial fyx = h.law.substitute_left_translation(f);
        Polynomial rhs(fyx.vars());
        for (int k = 0; k < 3; ++k) {
            const Polynomial& a = h.law.left_field(j)[k];
            if (a.is_zero()) continue;
            rhs += a.embedded(fyx.vars(), 0) * fyx.derivative(k);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("left and right fields commute") {
    for (const char* name : {"heisenberg:1", "engel"}) {
        Fixture f(name);
        const int n = f.algebra.dim();
        oracle::RationalSampler sampler(7);
        Polynomial p = sampler.polynomial(f.law.group_vars(), f.algebra.weights(), 6, 8);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Polynomial a = f.law.apply_left_field(i, f.law.apply_right_field(j, p));
                Polynomial b = f.law.apply_right_field(j, f.law.apply_left_field(i, p));
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("field brackets realize the structure constants") {
    for (const char* name : {"heisenberg:2", "engel"}) {
        Fixture f(name);
        const int n = f.algebra.dim();
        oracle::RationalSampler sampler(13);
        Polynomial p = sampler.polynomial(f.law.group_vars(), f.algebra.weights(), 5, 6);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Polynomial lhs = f.law.apply_left_field(i, f.law.apply_left_field(j, p)) -
                                 f.law.apply_left_field(j, f.law.apply_left_field(i, p));
                Polynomial rhs(f.law.group_vars());
                for (const auto& [k, c] : f.algebra.bracket(i, j))
                    rhs += f.law.apply_left_field(k, p).scaled(c);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("dual basis duality relations") {
    for (const char* name : {"abelian:3", "heisenberg:1", "heisenberg:2", "engel"}) {
        Fixture f(name);
        DualBasisTable table(f.law, 4);
        const int n = f.algebra.dim();
        auto all = indices_up_to_degree(f.algebra.weights(), 4);
        for (const auto& alpha : all) {
            const Polynomial& qa = table.q(alpha);
            CHECK(qa.is_homogeneous(f.algebra.weights(), f.algebra.homogeneous_degree(alpha)));
            for (const auto& beta : all) {
                Polynomial applied = f.law.apply_left_monomial(beta, qa);
                Rational at0 = applied.coefficient(MultiIndex(n, 0));
                CHECK(at0 == Rational(alpha == beta ? 1 : 0));
            }
        }
    }
}

TEST_CASE("abelian dual basis is x^alpha / alpha!") {
    Fixture f("abelian:3");
    DualBasisTable table(f.law, 4);
    for (const auto& alpha : indices_up_to_degree(f.algebra.weights(), 4)) {
        Rational fact(1);
        for (int a : alpha) fact *= factorial(static_cast<unsigned>(a));
        Polynomial expected =
            Polynomial::monomial(f.law.group_vars(), alpha, Rational(1) / fact);
        CHECK(table.q(alpha) == expected);
    }
}

TEST_CASE("heisenberg degree-1 and degree-2 slices") {
    Fixture f("heisenberg:1");
    DualBasisTable table(f.law, 2);
    const VarSet vx = f.law.group_vars();
    CHECK(table.q({1, 0, 0}) == Polynomial::variable(vx, 0));
    CHECK(table.q({0, 1, 0}) == Polynomial::variable(vx, 1));
    CHECK(table.degree_slice(2).size() == 4);
}

TEST_CASE("q homogeneity under dilation") {
    Fixture f("engel");
    DualBasisTable table(f.law, 5);
    const VarSet vx = f.law.group_vars();
    oracle::RationalSampler sampler(19);
    Rational r = sampler.next();
    std::vector<Polynomial> dil(4);
    for (int k = 0; k < 4; ++k)
        dil[k] = Polynomial::variable(vx, k).scaled(
            rational_pow(r, static_cast<unsigned>(f.algebra.weights()[k])));
    for (const auto& alpha : indices_up_to_degree(f.algebra.weights(), 5)) {
        Polynomial lhs = table.q(alpha).substitute(dil);
        Polynomial rhs = table.q(alpha).scaled(
            rational_pow(r, static_cast<unsigned>(f.algebra.homogeneous_degree(alpha))));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("product closure of the dual basis") {
    Fixture f("heisenberg:1");
    DualBasisTable table(f.law, 6);
    // q_{a1} q_{a2} lies in span{q_a : [a]=[a1]+[a2]}: project on the slice
    // via the pairing matrix and demand zero residual.
    auto project_residual = [&](const Polynomial& p, int d) {
        Polynomial residual = p;
        for (const auto& alpha : table.degree_slice(d)) {
            Polynomial applied = f.law.apply_left_monomial(alpha, p);
            Rational coef = applied.coefficient(MultiIndex(3, 0));
            residual -= table.q(alpha).scaled(coef);
        }
        return residual;
    };
    for (const auto& a1 : indices_up_to_degree(f.algebra.weights(), 3)) {
        for (const auto& a2 : indices_up_to_degree(f.algebra.weights(), 3)) {
            const int d = f.algebra.homogeneous_degree(a1) + f.algebra.homogeneous_degree(a2);
            if (d == 0 || d > 6) continue;
            Polynomial prod = table.q(a1) * table.q(a2);
            CHECK(project_residual(prod, d).is_zero());
        }
    }
}

TEST_CASE("decomposition coefficients") {
    Fixture f("heisenberg:1");
    DualBasisTable table(f.law, 4);

    // Boundary values: the only term with alpha2 = 0 is (alpha, 0) with c=1.
    for (const auto& alpha : indices_up_to_degree(f.algebra.weights(), 4)) {
        if (is_zero_index(alpha)) continue;
        auto terms = table.decomposition(alpha);
        for (const auto& t : terms) {
            if (is_zero_index(t.alpha2)) {
                CHECK(t.alpha1 == alpha);
                CHECK(t.c == 1);
            }
            if (is_zero_index(t.alpha1)) {
                CHECK(t.alpha2 == alpha);
                CHECK(t.c == 1);
            }
        }
    }

    // Central coordinate picks up a cross term on the two degree-1 indices:
    // q_{(0,0,1)}(x*y) = q_{(0,0,1)}(x) + q_{(0,0,1)}(y) - q_{(0,1,0)}(x) q_{(1,0,0)}(y)
    // with the group law (x*y)_3 = x3 + y3 + (x1 y2 - x2 y1)/2.
    auto terms = table.decomposition({0, 0, 1});
    bool found_cross = false;
    for (const auto& t : terms) {
        if (t.alpha1 == MultiIndex{0, 1, 0} && t.alpha2 == MultiIndex{1, 0, 0}) {
            found_cross = true;
            CHECK(t.c == Rational(-1));
        }
    }
    CHECK(found_cross);
    CHECK(terms.size() == 3);
}

TEST_CASE("abelian decomposition is the Pascal support") {
    Fixture f("abelian:2");
    DualBasisTable table(f.law, 4);
    // With q_alpha = x^alpha/alpha!, (x+y)^alpha/alpha! expands with all
    // coefficients equal to one in the q-normalization.
    for (const auto& alpha : indices_up_to_degree(f.algebra.weights(), 4)) {
        if (is_zero_index(alpha)) continue;
        auto terms = table.decomposition(alpha);
        std::size_t expected = 1;
        for (int a : alpha) expected *= static_cast<std::size_t>(a + 1);
        CHECK(terms.size() == expected);
        for (const auto& t : terms) {
            CHECK(t.c == 1);
            CHECK(add_indices(t.alpha1, t.alpha2) == alpha);
        }
    }
}

TEST_CASE("taylor polynomial and remainder") {
    Fixture f("heisenberg:1");
    DualBasisTable table(f.law, 6);
    const VarSet vx = f.law.group_vars();
    const VarSet vxz = VarSet::pair("x", "z", 3);

    SUBCASE("exact reproduction at high order") {
        oracle::RationalSampler sampler(29);
        Polynomial p = sampler.polynomial(vx, f.algebra.weights(), 5, 6);
        CHECK(table.taylor_remainder(p, 6).is_zero());
    }

    SUBCASE("constant truncation of a linear function") {
        Polynomial x1 = Polynomial::variable(vx, 0);
        Polynomial p0 = table.taylor_polynomial(x1, 0);
        CHECK(p0 == x1.embedded(vxz, 0));
    }

    SUBCASE("central coordinate at order one") {
        Polynomial x3 = Polynomial::variable(vx, 2);
        Polynomial p1 = table.taylor_polynomial(x3, 1);
        // x3 + (X1 x3)(x) z1 + (X2 x3)(x) z2
        Polynomial expected = x3.embedded(vxz, 0);
        expected += f.law.apply_left_field(0, x3).embedded(vxz, 0) *
                    Polynomial::variable(vxz, 3);
        expected += f.law.apply_left_field(1, x3).embedded(vxz, 0) *
                    Polynomial::variable(vxz, 4);
        CHECK(p1 == expected);
        // Remainder is z3 exactly, i.e. the degree-2 layer
        // q_{(0,0,1)}(z) + (X1 X2 x3) q_{(1,1,0)}(z) with X1 X2 x3 = 1/2.
        Polynomial rem = table.taylor_remainder(x3, 1);
        CHECK(rem == Polynomial::variable(vxz, 5));
        Polynomial layer = table.q({0, 0, 1}).embedded(vxz, 1) +
                           table.q({1, 1, 0}).embedded(vxz, 1).scaled(Rational(1, 2));
        CHECK(rem == layer);
    }

    SUBCASE("remainder derivatives vanish through order M") {
        oracle::RationalSampler sampler(31);
        Polynomial p = sampler.polynomial(vx, f.algebra.weights(), 6, 5);
        for (int m = 0; m <= 3; ++m) {
            Polynomial rem = table.taylor_remainder(p, m);
            // Apply X^alpha in the z block and set z = 0: all orders <= m die.
            for (const auto& alpha : indices_up_to_degree(f.algebra.weights(), m)) {
                Polynomial cur = rem;
                auto word = index_to_word(alpha);
                std::reverse(word.begin(), word.end());
                for (int step : word) {
                    Polynomial next(cur.vars());
                    for (int k = 0; k < 3; ++k) {
                        const Polynomial& a = f.law.left_field(step)[k];
                        if (a.is_zero()) continue;
                        next += a.embedded(cur.vars(), 1) * cur.derivative(3 + k);
                    }
                    cur = next;
                }
                // Evaluate at z = 0 keeping x free.
                std::vector<Polynomial> images(6);
                for (int k = 0; k < 3; ++k) {
                    images[k] = Polynomial::variable(vx, k);
                    images[3 + k] = Polynomial(vx);
                }
                CHECK(cur.substitute(images).is_zero());
            }
        }
    }
}

TEST_CASE("qbasis slices are invertible through degree 8") {
    for (const char* name : {"abelian:3", "heisenberg:1", "engel"}) {
        Fixture f(name);
        CHECK_NOTHROW(DualBasisTable(f.law, 8));
    }
}
