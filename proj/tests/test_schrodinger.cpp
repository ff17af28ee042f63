#include "nilcalc/schrodinger.hpp"

#include "nilcalc/hermite.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace nilcalc;

TEST_CASE("hermite functions are orthonormal") {
    const int n = 12;
    const double du = 0.01;
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
    for (double u = -12.0; u <= 12.0; u += du) {
        auto psi = hermite_values(n, u);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) gram[j][k] += psi[j] * psi[k] * du;
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            CHECK(gram[j][k] == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-8).scale(1.0));
}

TEST_CASE("representation at the identity") {
    RepMatrix rep = schrodinger_rep(1.0, {0.0, 0.0, 0.0}, 24);
    CHECK(rep.block_distance([&] {
              RepMatrix eye;
              eye.lambda = 1.0;
              eye.n = 24;
              eye.entries.assign(24 * 24, 0.0);
              for (int j = 0; j < 24; ++j) eye.at(j, j) = 1.0;
              return eye;
          }(),
          24) < 1e-8);
}

TEST_CASE("homomorphism and unitarity defects") {
    auto g = catalog_group("heisenberg:1");
    GroupLawTable law(g);
    const int n = 64;
    std::vector<std::vector<double>> points{{0.7, -0.4, 0.3}, {-0.5, 0.8, -0.6}};
    for (double lambda : {1.0, -1.0, 0.6}) {
        RepMatrix a = schrodinger_rep(lambda, points[0], n);
        RepMatrix b = schrodinger_rep(lambda, points[1], n);
        CHECK(a.unitarity_defect(n / 2) < 1e-6);
        auto prod_point = law.product(points[0], points[1]);
        RepMatrix ab = a.multiply(b);
        RepMatrix direct = schrodinger_rep(lambda, prod_point, n);
        CHECK(ab.block_distance(direct, n / 2) < 1e-6);
    }
}

TEST_CASE("derived representation realizes the bracket") {
    const int n = 32;
    for (double lambda : {1.0, -0.7}) {
        RepMatrix x1 = rep_derived_x1(lambda, n);
        RepMatrix x2 = rep_derived_x2(lambda, n);
        RepMatrix x3 = rep_derived_x3(lambda, n);
        RepMatrix comm = x1.multiply(x2);
        RepMatrix reverse = x2.multiply(x1);
        // [pi(X1), pi(X2)] = pi(X3) on the interior block (the boundary rows
        // feel the basis truncation).
        double worst = 0.0;
        for (int j = 0; j < n - 2; ++j)
            for (int k = 0; k < n - 2; ++k)
                worst = std::max(worst,
                                 std::abs(comm.at(j, k) - reverse.at(j, k) - x3.at(j, k)));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("derived representation matches finite differences of the flow") {
    // pi(X_j) approximately equals (pi(exp(t e_j)) - pi(exp(-t e_j)))/(2t).
    const int n = 24;
    const double lambda = 0.9, t = 1e-4;
    const RepMatrix derived[3] = {rep_derived_x1(lambda, n), rep_derived_x2(lambda, n),
                                  rep_derived_x3(lambda, n)};
    for (int j = 0; j < 3; ++j) {
        std::vector<double> plus(3, 0.0), minus(3, 0.0);
        plus[j] = t;
        minus[j] = -t;
        RepMatrix a = schrodinger_rep(lambda, plus, n);
        RepMatrix b = schrodinger_rep(lambda, minus, n);
        double worst = 0.0;
        for (int r = 0; r < n / 2; ++r)
            for (int c = 0; c < n / 2; ++c)
                worst = std::max(worst, std::abs((a.at(r, c) - b.at(r, c)) / (2.0 * t) -
                                                 derived[j].at(r, c)));
        CHECK(worst < 1e-5);
    }
}

namespace {

GridFunction modulated_bump(const GridSpec& spec, double s1, double s2, double s3, double omega,
                            double c1 = 0.0, double c2 = 0.0) {
    return GridFunction::sample(spec, [&](const std::vector<double>& x) {
        const double e = (x[0] - c1) * (x[0] - c1) / (2 * s1 * s1) +
                         (x[1] - c2) * (x[1] - c2) / (2 * s2 * s2) +
                         x[2] * x[2] / (2 * s3 * s3);
        return std::exp(-e) * std::cos(1.6 * omega * x[2]);
    });
}

}  // namespace

TEST_CASE("fourier transform: hermite matrix against the quadrature definition") {
    // Small-basis cross-check of the kernel-route transform against the
    // literal integral sum_x f(x) pi_lambda(-x)_{jk} vol.
    GridSpec spec({4.0, 4.0, 6.0}, {25, 25, 25});
    GridFunction f = modulated_bump(spec, 1.0, 1.1, 1.6, 1.0);
    const double lambda = 1.1;
    const int n = 6;
    RepMatrix fast = group_fourier_h1(f, lambda, n);

    RepMatrix direct;
    direct.lambda = lambda;
    direct.n = n;
    direct.entries.assign(n * n, 0.0);
    const double vol = spec.cell_volume();
    for (std::size_t i = 0; i < spec.total(); ++i) {
        auto x = spec.point_flat(i);
        if (f[i] == 0.0) continue;
        std::vector<double> nx{-x[0], -x[1], -x[2]};
        RepMatrix pix = schrodinger_rep(lambda, nx, n, 0.01);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) direct.at(r, c) += f[i] * vol * pix.at(r, c);
    }
    double scale = std::max(direct.hs_norm_block(n), 1e-12);
    CHECK(fast.block_distance(direct, n) / scale < 5e-3);
}

TEST_CASE("hs norm from the kernel matches the hermite matrix") {
    GridSpec spec({4.0, 4.0, 6.0}, {33, 33, 33});
    GridFunction f = modulated_bump(spec, 0.9, 1.0, 1.5, 1.0);
    const double lambda = 1.3;
    const double direct = fourier_hs_norm_sq(f, lambda);
    RepMatrix m = group_fourier_h1(f, lambda, 72);
    double viaherm = 0.0;
    for (const auto& e : m.entries) viaherm += std::norm(e);
    CHECK(direct == doctest::Approx(viaherm).epsilon(0.02));
}

TEST_CASE("plancherel with a frozen constant") {
    GridSpec spec({5.0, 5.0, 8.0}, {33, 33, 41});
    std::vector<GridFunction> refs{modulated_bump(spec, 1.0, 1.0, 1.8, 1.0),
                                   modulated_bump(spec, 1.3, 0.8, 2.2, 1.0)};
    std::vector<GridFunction> tests;
    for (int s = 0; s < 3; ++s)
        tests.push_back(random_bumps(spec, 900 + s, {2, 5.0, 0.25, 1.6, 2}));
    PlancherelConfig config;
    PlancherelReport report = plancherel_check_h1(refs, tests, config);
    CHECK(report.calibration_drift < 0.01);
    CHECK(report.max_relative_error < 0.03);
    // The analytic value of the constant in this normalization is (2 pi)^-2.
    CHECK(report.constant ==
          doctest::Approx(1.0 / (4.0 * std::numbers::pi * std::numbers::pi)).epsilon(0.02));
}

TEST_CASE("generator intertwining through the transform") {
    auto g = catalog_group("heisenberg:1");
    GroupLawTable law(g);
    // The central-axis derivative is the accuracy driver: centered stencils
    // see a relative error of about (h3 omega)^2/6 on the modulation.
    GridSpec spec({5.0, 5.0, 8.0}, {33, 33, 65});
    GridFunction f = modulated_bump(spec, 1.0, 1.1, 1.8, 0.75, 0.4, -0.3);
    for (double lambda : {0.8, 1.4}) {
        IntertwiningReport report = intertwining_check_h1(law, f, lambda, 56);
        CHECK(report.relative_error < 0.03);
    }
}
