#include "nilcalc/operators.hpp"

#include "oracle_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace nilcalc;

namespace {

struct Fixture {
    GradedLieAlgebra algebra;
    GroupLawTable law;
    OperatorAlgebra ops;
    explicit Fixture(const std::string& name)
        : algebra(catalog_group(name)), law(algebra), ops(law) {}
};

VarCoeffOperator random_op(Fixture& f, oracle::RationalSampler& sampler, std::mt19937_64& rng,
                           int max_order, int coeff_degree, int terms) {
    auto betas = indices_up_to_degree(f.algebra.weights(), max_order);
    std::uniform_int_distribution<std::size_t> pick(0, betas.size() - 1);
    VarCoeffOperator op(f.law.group_vars());
    for (int t = 0; t < terms; ++t)
        op.add_term(betas[pick(rng)],
                    sampler.polynomial(f.law.group_vars(), f.algebra.weights(), coeff_degree, 3));
    return op;
}

}  // namespace

TEST_CASE("pbw normal ordering on the catalog") {
    Fixture ab("abelian:3");
    CHECK(ab.ops.normal_order({1, 0}) ==
          InvariantOperator::monomial(3, {1, 1, 0}, Rational(1)));

    Fixture h("heisenberg:1");
    // X2 X1 = X1 X2 - X3.
    InvariantOperator expect = InvariantOperator::monomial(3, {1, 1, 0}, Rational(1)) -
                               InvariantOperator::monomial(3, {0, 0, 1}, Rational(1));
    CHECK(h.ops.normal_order({1, 0}) == expect);
    // X3 X1 = X1 X3 (commuting pair).
    CHECK(h.ops.normal_order({2, 0}) ==
          InvariantOperator::monomial(3, {1, 0, 1}, Rational(1)));
}

TEST_CASE("pbw soundness against sequential application") {
    for (const char* name : {"heisenberg:1", "heisenberg:2", "engel"}) {
        Fixture f(name);
        const int n = f.algebra.dim();
        std::mt19937_64 rng(101);
        std::uniform_int_distribution<int> len(0, 5), gen(0, n - 1);
        oracle::RationalSampler sampler(103);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> word(len(rng));
            for (auto& w : word) w = gen(rng);
            Polynomial fpoly =
                sampler.polynomial(f.law.group_vars(), f.algebra.weights(), 6, 5);
            Polynomial direct = f.law.apply_left_word(word, fpoly);
            Polynomial via_pbw = f.ops.apply(f.ops.normal_order(word), fpoly);
            CHECK(direct == via_pbw);
        }
    }
}

TEST_CASE("composition identities") {
    Fixture ab("abelian:2");
    const VarSet vx = ab.law.group_vars();
    // d1 o (x1 Id) = x1 d1 + Id.
    VarCoeffOperator d1 = VarCoeffOperator::from_invariant(vx, InvariantOperator::generator(2, 0));
    VarCoeffOperator mul_x1 = VarCoeffOperator::multiplication(Polynomial::variable(vx, 0));
    VarCoeffOperator composed = ab.ops.compose(d1, mul_x1);
    VarCoeffOperator expect = VarCoeffOperator::term(Polynomial::variable(vx, 0), {1, 0});
    expect += VarCoeffOperator::identity(vx);
    CHECK(composed == expect);

    Fixture h("heisenberg:1");
    const VarSet hx = h.law.group_vars();
    VarCoeffOperator x1 = VarCoeffOperator::from_invariant(hx, InvariantOperator::generator(3, 0));
    VarCoeffOperator x2 = VarCoeffOperator::from_invariant(hx, InvariantOperator::generator(3, 1));
    VarCoeffOperator bracket = h.ops.compose(x1, x2) - h.ops.compose(x2, x1);
    CHECK(bracket ==
          VarCoeffOperator::from_invariant(hx, InvariantOperator::generator(3, 2)));

    std::mt19937_64 rng(107);
    oracle::RationalSampler sampler(109);
    VarCoeffOperator a = random_op(h, sampler, rng, 3, 2, 3);
    CHECK(h.ops.compose(VarCoeffOperator::identity(hx), a) == a);
    CHECK(h.ops.compose(a, VarCoeffOperator::identity(hx)) == a);
}

TEST_CASE("composition soundness") {
    for (const char* name : {"heisenberg:1", "engel"}) {
        Fixture f(name);
        std::mt19937_64 rng(113);
        oracle::RationalSampler sampler(127);
        for (int trial = 0; trial < 12; ++trial) {
            VarCoeffOperator a = random_op(f, sampler, rng, 3, 2, 3);
            VarCoeffOperator b = random_op(f, sampler, rng, 3, 2, 3);
            Polynomial fp = sampler.polynomial(f.law.group_vars(), f.algebra.weights(), 6, 4);
            CHECK(f.ops.apply(f.ops.compose(a, b), fp) == f.ops.apply(a, f.ops.apply(b, fp)));
        }
    }
}

TEST_CASE("apply basics") {
    Fixture f("engel");
    const VarSet vx = f.law.group_vars();
    for (int j = 0; j < 4; ++j) {
        VarCoeffOperator xj =
            VarCoeffOperator::from_invariant(vx, InvariantOperator::generator(4, j));
        // X_j x_j = 1 on any catalog group (the fields are unipotent).
        CHECK(f.ops.apply(xj, Polynomial::variable(vx, j)) ==
              Polynomial::constant(vx, Rational(1)));
    }
    oracle::RationalSampler sampler(131);
    Polynomial p = sampler.polynomial(vx, f.algebra.weights(), 4, 4);
    CHECK(f.ops.apply(VarCoeffOperator::identity(vx), p) == p);
}

TEST_CASE("formal adjoints") {
    Fixture ab("abelian:2");
    const VarSet vx = ab.law.group_vars();
    VarCoeffOperator d1 = VarCoeffOperator::from_invariant(vx, InvariantOperator::generator(2, 0));
    CHECK(ab.ops.formal_adjoint(d1) == d1.scaled(Rational(-1)));

    // (x1 d1)^* = -x1 d1 - Id.
    VarCoeffOperator x1d1 = VarCoeffOperator::term(Polynomial::variable(vx, 0), {1, 0});
    VarCoeffOperator expect = x1d1.scaled(Rational(-1)) - VarCoeffOperator::identity(vx);
    CHECK(ab.ops.formal_adjoint(x1d1) == expect);

    Fixture h("heisenberg:1");
    auto sub = h.ops.rockland(RocklandVariant::SubLaplacian, 2);
    VarCoeffOperator subop = VarCoeffOperator::from_invariant(h.law.group_vars(), sub.op);
    CHECK(h.ops.formal_adjoint(subop) == subop);
}

TEST_CASE("adjoint involution and anti-homomorphism") {
    for (const char* name : {"heisenberg:1", "engel"}) {
        Fixture f(name);
        std::mt19937_64 rng(137);
        oracle::RationalSampler sampler(139);
        for (int trial = 0; trial < 8; ++trial) {
            VarCoeffOperator a = random_op(f, sampler, rng, 3, 2, 3);
            VarCoeffOperator b = random_op(f, sampler, rng, 2, 2, 2);
            CHECK(f.ops.formal_adjoint(f.ops.formal_adjoint(a)) == a);
            CHECK(f.ops.formal_adjoint(f.ops.compose(a, b)) ==
                  f.ops.compose(f.ops.formal_adjoint(b), f.ops.formal_adjoint(a)));
        }
    }
}

TEST_CASE("rockland catalog") {
    Fixture h("heisenberg:1");
    auto r1 = h.ops.rockland(RocklandVariant::Alternating, 2);
    InvariantOperator expect = InvariantOperator::monomial(3, {4, 0, 0}, Rational(1)) +
                               InvariantOperator::monomial(3, {0, 4, 0}, Rational(1)) -
                               InvariantOperator::monomial(3, {0, 0, 2}, Rational(1));
    CHECK(r1.op == expect);
    CHECK(r1.degree == 4);
    CHECK(h.ops.homogeneous_degree(r1.op) == 4);
    CHECK(h.ops.formal_adjoint(r1.op) == r1.op);

    auto sub = h.ops.rockland(RocklandVariant::SubLaplacian, 2);
    InvariantOperator expect_sub = InvariantOperator::monomial(3, {2, 0, 0}, Rational(-1)) +
                                   InvariantOperator::monomial(3, {0, 2, 0}, Rational(-1));
    CHECK(sub.op == expect_sub);
    CHECK(sub.degree == 2);

    Fixture ab("abelian:3");
    auto lap = ab.ops.rockland(RocklandVariant::Alternating, 1);
    InvariantOperator neg_laplace(3);
    for (int j = 0; j < 3; ++j) {
        MultiIndex b(3, 0);
        b[j] = 2;
        neg_laplace += InvariantOperator::monomial(3, b, Rational(-1));
    }
    CHECK(lap.op == neg_laplace);
    CHECK(lap.degree == 2);

    Fixture e("engel");
    auto r2 = e.ops.rockland(RocklandVariant::Quartic, 6);
    CHECK(r2.degree == 24);
    CHECK(e.ops.homogeneous_degree(r2.op) == 24);
    CHECK_THROWS_AS(e.ops.rockland(RocklandVariant::Alternating, 4), std::domain_error);
}

TEST_CASE("orders and homogeneity flags") {
    Fixture h("heisenberg:1");
    const VarSet vx = h.law.group_vars();
    CHECK(h.ops.order(InvariantOperator::generator(3, 2)) == 2);
    CHECK(h.ops.order(InvariantOperator::identity(3)) == 0);
    VarCoeffOperator mixed = VarCoeffOperator::identity(vx);
    mixed += VarCoeffOperator::from_invariant(vx, InvariantOperator::generator(3, 0));
    CHECK_FALSE(h.ops.homogeneous_degree(mixed).has_value());
    // x1 X2 has dilation degree 1 - 1 = 0.
    VarCoeffOperator x1X2 = VarCoeffOperator::term(Polynomial::variable(vx, 0), {0, 1, 0});
    CHECK(h.ops.homogeneous_degree(x1X2) == 0);
}

TEST_CASE("dilation covariance of homogeneous operators") {
    Fixture h("heisenberg:1");
    const VarSet vx = h.law.group_vars();
    oracle::RationalSampler sampler(149);
    auto dil_images = [&](const Rational& r) {
        std::vector<Polynomial> images(3);
        for (int k = 0; k < 3; ++k)
            images[k] = Polynomial::variable(vx, k).scaled(
                rational_pow(r, static_cast<unsigned>(h.algebra.weights()[k])));
        return images;
    };
    // a homogeneous of degree d: a(f o dil_r) = r^d (a f) o dil_r.
    std::vector<VarCoeffOperator> cases{
        VarCoeffOperator::from_invariant(vx, h.ops.rockland(RocklandVariant::SubLaplacian, 2).op),
        VarCoeffOperator::term(Polynomial::variable(vx, 2), {1, 0, 0}),
        VarCoeffOperator::from_invariant(vx, InvariantOperator::generator(3, 2))};
    for (const auto& a : cases) {
        auto d = h.ops.homogeneous_degree(a);
        REQUIRE(d.has_value());
        Rational r = sampler.next();
        if (is_zero(r)) r = Rational(2);
        Rational rd = *d >= 0 ? rational_pow(r, static_cast<unsigned>(*d))
                              : rational_pow(Rational(1) / r, static_cast<unsigned>(-*d));
        Polynomial f = sampler.polynomial(vx, h.algebra.weights(), 5, 5);
        Polynomial lhs = h.ops.apply(a, f.substitute(dil_images(r)));
        Polynomial rhs = h.ops.apply(a, f).substitute(dil_images(r)).scaled(rd);
        CHECK(lhs == rhs);
    }
}
