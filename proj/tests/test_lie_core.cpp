#include "nilcalc/algebra.hpp"
#include "nilcalc/group_law.hpp"

#include "oracle_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>

using namespace nilcalc;

TEST_CASE("gradation validation accepts the catalog") {
    for (const char* name : {"abelian:3", "heisenberg:1", "heisenberg:2", "engel"}) {
        auto g = catalog_group(name);
        auto report = g.validate();
        CHECK_MESSAGE(report.ok, name);
    }
}

TEST_CASE("abelian with uneven weights validates") {
    GradedLieAlgebra g("ab2w", {1, 3}, {});
    CHECK(g.validate().ok);
    CHECK(g.homogeneous_dimension() == 4);
    CHECK(g.nu_o() == 3);
}

TEST_CASE("weight-incompatible bracket is reported") {
    // [X1,X2] = X1 has weight 1 on the left, needs 2.
    GradedLieAlgebra g("bad", {1, 1, 2}, {{0, 1, 0, Rational(1)}});
    auto report = g.validate();
    CHECK_FALSE(report.ok);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations[0].message.find("weight 1 != 2") != std::string::npos);
}

TEST_CASE("malformed spec throws") {
    CHECK_THROWS_AS(GradedLieAlgebra("oob", {1, 1}, {{0, 1, 5, Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GradedLieAlgebra("zw", {0, 1}, {}), std::invalid_argument);
}

TEST_CASE("bch on abelian is addition") {
    auto g = catalog_group("abelian:3");
    GroupLawTable law(g);
    oracle::RationalSampler sampler(11);
    auto x = sampler.point(3), y = sampler.point(3);
    auto z = law.product(x, y);
    for (int k = 0; k < 3; ++k) CHECK(z[k] == x[k] + y[k]);
}

TEST_CASE("bch heisenberg third coordinate") {
    auto g = catalog_group("heisenberg:1");
    GroupLawTable law(g);
    // (x*y)_3 = x3 + y3 + (x1 y2 - x2 y1)/2, checked against the commutator
    // expansion oracle on random rational points.
    oracle::RationalSampler sampler(17);
    for (int trial = 0; trial < 25; ++trial) {
        auto x = sampler.point(3), y = sampler.point(3);
        auto z = law.product(x, y);
        CHECK(z[0] == x[0] + y[0]);
        CHECK(z[1] == x[1] + y[1]);
        CHECK(z[2] == x[2] + y[2] + (x[0] * y[1] - x[1] * y[0]) / 2);
        CHECK(oracle::points_equal(z, oracle::bch_low_order(g, x, y)));
    }
}

TEST_CASE("bch engel matches the commutator-series oracle") {
    auto g = catalog_group("engel");
    GroupLawTable law(g);
    oracle::RationalSampler sampler(23);
    for (int trial = 0; trial < 25; ++trial) {
        auto x = sampler.point(4), y = sampler.point(4);
        CHECK(oracle::points_equal(law.product(x, y), oracle::bch_low_order(g, x, y)));
    }
    // Coordinate 4 carries a genuine degree-3 term in (x,y).
    const Polynomial& c4 = law.coordinate(3);
    int max_plain_degree = 0;
    for (const auto& [alpha, c] : c4.terms())
        max_plain_degree = std::max(max_plain_degree, order_of(alpha));
    CHECK(max_plain_degree == 3);
}

TEST_CASE("group axioms: identity, inverse, associativity") {
    for (const char* name : {"abelian:3", "heisenberg:1", "heisenberg:2", "engel"}) {
        auto g = catalog_group(name);
        GroupLawTable law(g);
        oracle::RationalSampler sampler(31);
        const int n = g.dim();
        RationalPoint zero(n, Rational(0));
        for (int trial = 0; trial < 10; ++trial) {
            auto x = sampler.point(n), y = sampler.point(n), z = sampler.point(n);
            CHECK(oracle::points_equal(law.product(x, zero), x));
            CHECK(oracle::points_equal(law.product(zero, x), x));
            CHECK(oracle::points_equal(law.product(x, group_inverse(x)), zero));
            CHECK(oracle::points_equal(law.product(group_inverse(x), x), zero));
            auto left = law.product(law.product(x, y), z);
            auto right = law.product(x, law.product(y, z));
            CHECK(oracle::points_equal(left, right));
        }
    }
}

TEST_CASE("dilations are group automorphisms") {
    auto g = catalog_group("heisenberg:1");
    GroupLawTable law(g);
    oracle::RationalSampler sampler(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = sampler.point(3), y = sampler.point(3);
        Rational r = sampler.next();
        auto lhs = dilate(g, r, law.product(x, y));
        auto rhs = law.product(dilate(g, r, x), dilate(g, r, y));
        CHECK(oracle::points_equal(lhs, rhs));
    }
    RationalPoint p{Rational(1), Rational(1), Rational(1)};
    auto d = dilate(g, Rational(2), p);
    CHECK(d[0] == 2);
    CHECK(d[1] == 2);
    CHECK(d[2] == 4);
}

TEST_CASE("homogeneous degree bookkeeping") {
    auto g = catalog_group("heisenberg:1");
    CHECK(g.homogeneous_degree({0, 0, 0}) == 0);
    CHECK(g.homogeneous_degree({0, 0, 1}) == 2);
    CHECK(g.homogeneous_degree({1, 1, 1}) == 4);
    CHECK(g.homogeneous_dimension() == 4);
    CHECK(catalog_group("engel").homogeneous_dimension() == 7);
    CHECK(catalog_group("abelian:5").homogeneous_dimension() == 5);
}

TEST_CASE("homogeneous norm: scaling and symmetry") {
    auto g = catalog_group("heisenberg:1");
    CHECK(homogeneous_norm(g, {0, 0, 0}) == 0.0);
    CHECK(homogeneous_norm(g, {1, 0, 0}) == doctest::Approx(1.0));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-2.0, 2.0), scale(0.1, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x{coord(rng), coord(rng), coord(rng)};
        double r = scale(rng);
        double lhs = homogeneous_norm(g, dilate(g, r, x));
        double rhs = r * homogeneous_norm(g, x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
        std::vector<double> inv{-x[0], -x[1], -x[2]};
        CHECK(homogeneous_norm(g, inv) == doctest::Approx(homogeneous_norm(g, x)));
    }
}

TEST_CASE("monomial homogeneity under dilation") {
    auto g = catalog_group("engel");
    GroupLawTable law(g);
    const VarSet vx = law.group_vars();
    oracle::RationalSampler sampler(43);
    for (const auto& alpha : indices_up_to_degree(g.weights(), 5)) {
        Polynomial mono = Polynomial::monomial(vx, alpha, Rational(1));
        Rational r = sampler.next();
        std::vector<Polynomial> dil(4);
        for (int k = 0; k < 4; ++k)
            dil[k] = Polynomial::variable(vx, k).scaled(
                rational_pow(r, static_cast<unsigned>(g.weights()[k])));
        Polynomial lhs = mono.substitute(dil);
        Polynomial rhs = mono.scaled(rational_pow(r, static_cast<unsigned>(g.homogeneous_degree(alpha))));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("group spec file round trip") {
    const char* path = "/tmp/nilcalc_test_group.json";
    {
        std::ofstream out(path);
        out << R"({"name":"h1-file","dim":3,"weights":[1,1,2],
                   "brackets":[{"i":1,"j":2,"k":3,"c":"1"}]})";
    }
    auto g = load_group_file(path);
    CHECK(g.validate().ok);
    GroupLawTable law(g);
    auto ref = catalog_group("heisenberg:1");
    GroupLawTable ref_law(ref);
    oracle::RationalSampler sampler(47);
    auto x = sampler.point(3), y = sampler.point(3);
    CHECK(oracle::points_equal(law.product(x, y), ref_law.product(x, y)));
}
