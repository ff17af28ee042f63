#include "nilcalc/suite.hpp"

#include "nilcalc/bessel.hpp"
#include "nilcalc/convolution.hpp"
#include "nilcalc/decay.hpp"
#include "nilcalc/heat.hpp"
#include "nilcalc/schrodinger.hpp"
#include "nilcalc/sobolev.hpp"
#include "nilcalc/symbols.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

namespace nilcalc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"abelian:3", "heisenberg:1", "heisenberg:2",
                                                "engel"};
    return names;
}

struct Stack {
    GradedLieAlgebra algebra;
    GroupLawTable law;
    OperatorAlgebra ops;
    DualBasisTable dual;
    SymbolCalculus calc;

    Stack(const std::string& name, int max_degree)
        : algebra(catalog_group(name)),
          law(algebra),
          ops(law),
          dual(law, max_degree),
          calc(ops, dual) {}
};

class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 5);
        return Rational(num(rng_), den(rng_));
    }
    RationalPoint point(int dim) {
        RationalPoint p(dim);
        for (auto& c : p) c = next();
        return p;
    }
    Polynomial polynomial(const VarSet& vars, const std::vector<int>& weights, int degree,
                          int terms) {
        std::vector<int> w;
        for (std::size_t b = 0; b < vars.blocks.size(); ++b)
            w.insert(w.end(), weights.begin(), weights.end());
        auto idx = indices_up_to_degree(w, degree);
        std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
        Polynomial p(vars);
        for (int t = 0; t < terms; ++t) p.add_term(idx[pick(rng_)], next());
        return p;
    }
    DiffOpSymbol symbol(Stack& s, int max_order, int coeff_degree, int terms) {
        auto betas = indices_up_to_degree(s.algebra.weights(), max_order);
        std::uniform_int_distribution<std::size_t> pick(0, betas.size() - 1);
        DiffOpSymbol out(s.law.group_vars());
        for (int t = 0; t < terms; ++t)
            out.add_term(betas[pick(rng_)],
                         polynomial(s.law.group_vars(), s.algebra.weights(), coeff_degree, 3));
        return out;
    }
    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

CriterionResult make_exact(int id, const std::string& name, const std::string& group,
                           long violations, double seconds, std::string details = "") {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.group = group;
    r.value = static_cast<double>(violations);
    r.threshold = 0.0;
    r.comparison = "==0";
    r.pass = violations == 0;
    r.seconds = seconds;
    r.details = std::move(details);
    return r;
}

CriterionResult make_bound(int id, const std::string& name, const std::string& group,
                           double value, double threshold, double seconds,
                           std::string details = "", bool greater = false) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.group = group;
    r.value = value;
    r.threshold = threshold;
    r.comparison = greater ? ">=" : "<=";
    r.pass = greater ? value >= threshold : value <= threshold;
    r.seconds = seconds;
    r.details = std::move(details);
    return r;
}

int scaled(double grid_scale, int n) {
    int v = static_cast<int>(std::lround(n * grid_scale));
    if (v < 9) v = 9;
    if (v % 2 == 0) ++v;  // odd counts keep the difference lattice aligned
    return v;
}

}  // namespace

CriterionResult criterion_bch_axioms(const SuiteConfig& config) {
    const auto start = Clock::now();
    long violations = 0;
    for (const auto& name : catalog_names()) {
        GradedLieAlgebra algebra = catalog_group(name);
        GroupLawTable law(algebra);
        RationalSampler sampler(config.seed ^ 0x1a2b3c);
        const int n = algebra.dim();
        const RationalPoint zero(n, Rational(0));
        for (int trial = 0; trial < 100; ++trial) {
            auto x = sampler.point(n), y = sampler.point(n), z = sampler.point(n);
            if (law.product(law.product(x, y), z) != law.product(x, law.product(y, z)))
                ++violations;
            if (law.product(x, zero) != x || law.product(zero, x) != x) ++violations;
            if (law.product(x, group_inverse(x)) != zero) ++violations;
            Rational r = sampler.next();
            if (dilate(algebra, r, law.product(x, y)) !=
                law.product(dilate(algebra, r, x), dilate(algebra, r, y)))
                ++violations;
        }
    }
    return make_exact(1, "bch group axioms (100 random triples per group)", "catalog", violations,
                      seconds_since(start));
}

CriterionResult criterion_duality(const SuiteConfig& config) {
    (void)config;
    const auto start = Clock::now();
    long violations = 0;
    std::string detail;
    for (const auto& name : catalog_names()) {
        // Invertibility through degree 8 (construction throws when singular).
        Stack s(name, 8);
        const auto& g = s.algebra;
        // Duality for [alpha],[beta] <= 6, verified through the coordinate
        // expansion of X^beta (an independent route from the field-iteration
        // used to build the table): X^beta q(0) = sum_gamma a_gamma(0)
        // gamma! [x^gamma] q.
        for (int d = 0; d <= 6; ++d) {
            const auto& slice = s.dual.degree_slice(d);
            for (const auto& beta : slice) {
                CoordinateOperator coord = CoordinateOperator::from_invariant(
                    s.law, InvariantOperator::monomial(g.dim(), beta, Rational(1)));
                std::map<MultiIndex, Rational> functional;
                const MultiIndex zero(g.dim(), 0);
                for (const auto& term : coord.terms()) {
                    const Rational at0 = term.coeff.coefficient(zero);
                    if (is_zero(at0)) continue;
                    Rational fact(1);
                    for (int a : term.partial) fact *= factorial(static_cast<unsigned>(a));
                    functional[term.partial] = at0 * fact;
                }
                for (const auto& alpha : slice) {
                    Rational pairing(0);
                    for (const auto& [gamma, c] : functional)
                        pairing += c * s.dual.q(alpha).coefficient(gamma);
                    if (pairing != Rational(alpha == beta ? 1 : 0)) ++violations;
                }
            }
            // Cross-degree vanishing follows from homogeneity of q_alpha.
            for (const auto& alpha : slice)
                if (!s.dual.q(alpha).is_homogeneous(g.weights(), d)) ++violations;
        }
        detail += name + " d<=8 invertible; ";
    }
    return make_exact(2, "dual basis duality ([a],[b]<=6 exact, slices invertible to 8)",
                      "catalog", violations, seconds_since(start), detail);
}

CriterionResult criterion_qalpha_identities(const SuiteConfig& config) {
    (void)config;
    const auto start = Clock::now();
    long violations = 0;
    for (const auto& name : catalog_names()) {
        Stack s(name, 6);
        const auto& g = s.algebra;
        const int n = g.dim();
        const MultiIndex origin(n, 0);

        for (int d = 1; d <= 6; ++d) {
            for (const auto& alpha : s.dual.degree_slice(d)) {
                // Homogeneity.
                if (!s.dual.q(alpha).is_homogeneous(g.weights(), d)) ++violations;
                // Decomposition: exact expansion (residual self-verified) and
                // the boundary values c_{alpha,0} = c_{0,alpha} = 1.
                auto terms = s.dual.decomposition(alpha);
                for (const auto& t : terms) {
                    if (is_zero_index(t.alpha2) && (t.alpha1 != alpha || t.c != 1)) ++violations;
                    if (is_zero_index(t.alpha1) && (t.alpha2 != alpha || t.c != 1)) ++violations;
                }
            }
        }

        // Product closure: q_{a1} q_{a2} decomposes exactly in the slice
        // [a1]+[a2]; expansion coefficients read off through the pairing
        // matrix, residual must vanish identically.
        for (int d1 = 1; d1 <= 5; ++d1) {
            for (int d2 = d1; d1 + d2 <= 6; ++d2) {
                for (const auto& a1 : s.dual.degree_slice(d1)) {
                    for (const auto& a2 : s.dual.degree_slice(d2)) {
                        Polynomial prod = s.dual.q(a1) * s.dual.q(a2);
                        const int d = d1 + d2;
                        const auto& slice = s.dual.degree_slice(d);
                        const auto& pairing = s.dual.pairing_matrix(d);
                        // Coefficients of prod in the monomial slice order.
                        std::vector<Rational> mono(slice.size(), Rational(0));
                        for (std::size_t i = 0; i < slice.size(); ++i)
                            mono[i] = prod.coefficient(slice[i]);
                        Polynomial residual = prod;
                        for (std::size_t i = 0; i < slice.size(); ++i) {
                            Rational c(0);
                            for (std::size_t j = 0; j < slice.size(); ++j) {
                                if (!is_zero(mono[j]))
                                    c += pairing.at(static_cast<int>(i), static_cast<int>(j)) *
                                         mono[j];
                            }
                            if (!is_zero(c)) residual -= s.dual.q(slice[i]).scaled(c);
                        }
                        if (!residual.is_zero()) ++violations;
                    }
                }
            }
        }
    }
    return make_exact(3, "dual-basis product/decomposition identities ([a]<=6)", "catalog",
                      violations, seconds_since(start));
}

std::vector<CriterionResult> criterion_leibniz(const SuiteConfig& config) {
    std::vector<CriterionResult> out;
    {
        const auto start = Clock::now();
        long violations = 0;
        for (const auto& name : catalog_names()) {
            Stack s(name, 6);
            RationalSampler sampler(config.seed ^ 0x4d5e6f);
            auto betas = indices_up_to_degree(s.algebra.weights(), 3);
            std::uniform_int_distribution<std::size_t> pick(0, betas.size() - 1);
            auto const_symbol = [&] {
                DiffOpSymbol sym(s.law.group_vars());
                for (int t = 0; t < 3; ++t)
                    sym.add_term(betas[pick(sampler.rng())],
                                 Polynomial::constant(s.law.group_vars(), sampler.next()));
                return sym;
            };
            for (int d = 0; d <= 6; ++d) {
                for (const auto& alpha : s.dual.degree_slice(d)) {
                    DiffOpSymbol s1 = const_symbol();
                    DiffOpSymbol s2 = const_symbol();
                    DiffOpSymbol lhs = s.calc.difference_op(alpha, s.calc.product(s1, s2));
                    DiffOpSymbol rhs(s.law.group_vars());
                    for (const auto& t : s.calc.leibniz_coeff_table(alpha)) {
                        DiffOpSymbol l = s.calc.difference_op(t.alpha1, s1);
                        if (l.is_zero()) continue;
                        DiffOpSymbol r = s.calc.difference_op(t.alpha2, s2);
                        if (r.is_zero()) continue;
                        rhs += s.calc.product(l, r).scaled(t.c);
                    }
                    if (!(lhs - rhs).is_zero()) ++violations;
                }
            }
        }
        out.push_back(make_exact(4, "Leibniz formula, exact on constant symbols ([a]<=6)",
                                 "catalog", violations, seconds_since(start)));
    }
    if (!config.symbolic_only) {
        const auto start = Clock::now();
        Stack s("heisenberg:1", 4);
        const double gs = config.grid_scale;
        GridSpec spec({6.0, 6.0, 9.0}, {scaled(gs, 49), scaled(gs, 49), scaled(gs, 49)});
        GridFunction f1 = GridFunction::sample(spec, [](const std::vector<double>& x) {
            const double a = (x[0] - 0.5) * (x[0] - 0.5) + (x[1] + 0.3) * (x[1] + 0.3);
            return std::exp(-a / 1.62 - (x[2] - 0.4) * (x[2] - 0.4) / 3.0);
        });
        GridFunction f2 = GridFunction::sample(spec, [](const std::vector<double>& x) {
            const double a = (x[0] + 0.4) * (x[0] + 0.4) + (x[1] - 0.2) * (x[1] - 0.2);
            return std::exp(-a / 2.0 - (x[2] + 0.3) * (x[2] + 0.3) / 2.4);
        });
        double worst = 0.0;
        for (const MultiIndex alpha : {MultiIndex{0, 0, 1}, MultiIndex{1, 0, 0}}) {
            // q~_alpha (f2*f1) against the decomposition sum.
            GridFunction conv = group_convolve(s.law, f2, f1).value;
            Polynomial qt = s.dual.q_tilde(alpha);
            GridFunction lhs = conv;
            for (std::size_t i = 0; i < spec.total(); ++i)
                lhs[i] *= qt.evaluate_double(spec.point_flat(i));
            GridFunction rhs(spec);
            for (const auto& t : s.dual.decomposition(alpha)) {
                Polynomial qa1 = s.dual.q_tilde(t.alpha1);
                Polynomial qa2 = s.dual.q_tilde(t.alpha2);
                GridFunction g2 = f2, g1 = f1;
                for (std::size_t i = 0; i < spec.total(); ++i) {
                    auto x = spec.point_flat(i);
                    g2[i] *= qa2.evaluate_double(x);
                    g1[i] *= qa1.evaluate_double(x);
                }
                GridFunction term = group_convolve(s.law, g2, g1).value;
                term *= to_double(t.c);
                rhs += term;
            }
            worst = std::max(worst, (lhs - rhs).l2_norm() / std::max(lhs.l2_norm(), 1e-300));
        }
        out.push_back(make_bound(4, "Leibniz formula, kernel-side on the grid", "heisenberg:1",
                                 worst, 0.02, seconds_since(start),
                                 "alpha in {(0,0,1),(1,0,0)}"));
    }
    return out;
}

CriterionResult criterion_composition(const SuiteConfig& config) {
    const auto start = Clock::now();
    long violations = 0;
    for (const auto& name : catalog_names()) {
        Stack s(name, 5);
        RationalSampler sampler(config.seed ^ 0x778899);
        for (int trial = 0; trial < 50; ++trial) {
            DiffOpSymbol s1 = sampler.symbol(s, 4, 3, 3);
            DiffOpSymbol s2 = sampler.symbol(s, 4, 3, 3);
            const int m1 = std::max(0, s1.order(s.algebra.weights()));
            DiffOpSymbol direct = s.calc.op_compose_direct(s1, s2);
            if (!(s.calc.compose_expansion(s1, s2, m1) - direct).is_zero()) ++violations;
            // All expansion terms beyond the order vanish.
            for (const auto& alpha : indices_up_to_degree(s.algebra.weights(), m1 + 2)) {
                if (s.algebra.homogeneous_degree(alpha) <= m1) continue;
                if (!s.calc.difference_op(alpha, s1).is_zero()) ++violations;
            }
            // Adjoint expansion against the direct adjoint.
            DiffOpSymbol adj_direct = s.calc.direct_adjoint(s1);
            if (!(s.calc.adjoint_expansion(s1, m1) - adj_direct).is_zero()) ++violations;
        }
    }
    return make_exact(5, "composition/adjoint expansions exact at M = order (50 pairs per group)",
                      "catalog", violations, seconds_since(start));
}

CriterionResult criterion_abelian_reduction(const SuiteConfig& config) {
    const auto start = Clock::now();
    long violations = 0;
    Stack s("abelian:3", 8);
    const VarSet vx = s.law.group_vars();

    // q_alpha = x^alpha / alpha! exactly.
    for (int d = 0; d <= 8; ++d) {
        for (const auto& alpha : s.dual.degree_slice(d)) {
            Rational fact(1);
            for (int a : alpha) fact *= factorial(static_cast<unsigned>(a));
            if (!(s.dual.q(alpha) - Polynomial::monomial(vx, alpha, Rational(1) / fact))
                     .is_zero())
                ++violations;
        }
    }

    // Composition expansion reduces to the classical finite Leibniz sum.
    auto binom = [](int n, int k) {
        Rational b(1);
        for (int i = 0; i < k; ++i) b *= Rational(n - i, i + 1);
        return b;
    };
    auto classical = [&](const DiffOpSymbol& s1, const DiffOpSymbol& s2) {
        DiffOpSymbol outsym(vx);
        for (const auto& [b, p] : s1.terms()) {
            for (const auto& [g, r] : s2.terms()) {
                MultiIndex mu(3, 0);
                while (true) {
                    Rational coeff(1);
                    Polynomial dr = r;
                    for (int v = 0; v < 3; ++v) {
                        coeff *= binom(b[v], mu[v]);
                        for (int t = 0; t < mu[v]; ++t) dr = dr.derivative(v);
                    }
                    if (!dr.is_zero() && !is_zero(coeff)) {
                        MultiIndex target(3);
                        for (int v = 0; v < 3; ++v) target[v] = b[v] - mu[v] + g[v];
                        outsym.add_term(target, (p * dr).scaled(coeff));
                    }
                    int v = 0;
                    while (v < 3) {
                        if (mu[v] < b[v]) {
                            ++mu[v];
                            break;
                        }
                        mu[v] = 0;
                        ++v;
                    }
                    if (v == 3) break;
                }
            }
        }
        return outsym;
    };
    RationalSampler sampler(config.seed ^ 0xabcdef);
    for (int trial = 0; trial < 50; ++trial) {
        DiffOpSymbol s1 = sampler.symbol(s, 3, 3, 3);
        DiffOpSymbol s2 = sampler.symbol(s, 3, 3, 3);
        DiffOpSymbol expect = classical(s1, s2);
        if (!(s.calc.op_compose_direct(s1, s2) - expect).is_zero()) ++violations;
        if (!(s.calc.compose_expansion(s1, s2, std::max(0, s1.order(s.algebra.weights()))) -
              expect)
                 .is_zero())
            ++violations;
    }
    return make_exact(6, "abelian stack degenerates to the classical calculus", "abelian:3",
                      violations, seconds_since(start));
}

namespace {

/// Shared grid context for the H1 criteria (heat run reused by 7-10).
struct H1Context {
    GradedLieAlgebra algebra = catalog_group("heisenberg:1");
    GroupLawTable law{algebra};
    OperatorAlgebra ops{law};
    RocklandSpec sub;
    GridSpec fine_grid;
    GridSpec coarse_grid;
    HeatRun fine;
    HeatRun coarse;
    BesselConfig bessel_config;
    BesselTable b1, b2, b4;

    explicit H1Context(const SuiteConfig& config) {
        sub = ops.rockland(RocklandVariant::SubLaplacian, 2);
        const double gs = config.grid_scale;
        fine_grid = GridSpec({7.0, 7.0, 10.0},
                             {scaled(gs, 49), scaled(gs, 49), scaled(gs, 57)});
        coarse_grid = GridSpec({7.0, 7.0, 10.0},
                               {scaled(gs, 25), scaled(gs, 25), scaled(gs, 29)});
        // Effective snapshot times shared by both runs: the coarse run's
        // mollifier time is the latest start, so schedule past it.
        const double t1_eff = 1.6, t2_eff = 3.2;
        HeatConfig hc;
        // Solver times = effective - t0; t0 is only known after the solve,
        // so probe it with a tiny run-independent computation: replicate the
        // mollifier rule here.
        auto t0_of = [&](const GridSpec& grid) {
            double t0 = 0.0;
            for (int axis = 0; axis < 3; ++axis)
                if (algebra.weights()[axis] == 1) {
                    const double target = 2.5 * grid.spacing(axis) / std::sqrt(2.0);
                    t0 = std::max(t0, target * target);
                }
            return t0;
        };
        hc.snapshot_times = {t1_eff - t0_of(fine_grid), t2_eff - t0_of(fine_grid)};
        fine = heat_solve(law, sub, fine_grid, hc);
        hc.snapshot_times = {t1_eff - t0_of(coarse_grid), t2_eff - t0_of(coarse_grid)};
        coarse = heat_solve(law, sub, coarse_grid, hc);

        bessel_config = BesselConfig{};
        b1 = bessel_potential(algebra, fine, 0, 1.0, bessel_config);
        b2 = bessel_potential(algebra, fine, 0, 2.0, bessel_config);
        b4 = bessel_potential(algebra, fine, 0, 4.0, bessel_config);
    }
};

std::vector<CriterionResult> heat_results(const SuiteConfig& config, const H1Context& ctx) {
    std::vector<CriterionResult> out;
    const auto start = Clock::now();
    ScalingReport fine_rep = heat_scaling_check(ctx.algebra, ctx.fine, 0, 1);
    ScalingReport coarse_rep = heat_scaling_check(ctx.algebra, ctx.coarse, 0, 1);
    const double t = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "t1=%.2f t2=%.2f nodes=%d coarse_dev=%.4f",
                  fine_rep.t1, fine_rep.t2, fine_rep.compared_nodes,
                  coarse_rep.max_relative_deviation);
    out.push_back(make_bound(7, "heat self-similarity deviation", "heisenberg:1",
                             fine_rep.max_relative_deviation, 0.05, t, buf));
    double drift = 0.0;
    for (std::size_t i = 0; i < ctx.fine.mass.size(); ++i)
        drift = std::max(drift, std::abs(ctx.fine.mass[i] - 1.0));
    out.push_back(make_bound(7, "heat mass drift", "heisenberg:1", drift, 0.01, 0.0));
    out.push_back(make_bound(7, "heat refinement decrease (coarse - fine deviation)",
                             "heisenberg:1",
                             coarse_rep.max_relative_deviation - fine_rep.max_relative_deviation,
                             0.0, 0.0, "", /*greater=*/true));
    if (!config.output_dir.empty()) {
        std::ofstream csv(config.output_dir + "/heat_h1.csv");
        csv << "t_effective,mass,max_scaling_deviation\n";
        csv << ctx.fine.times[0] << "," << ctx.fine.mass[0] << ",\n";
        csv << ctx.fine.times[1] << "," << ctx.fine.mass[1] << ","
            << fine_rep.max_relative_deviation << "\n";
    }
    return out;
}

std::vector<CriterionResult> decay_results(const SuiteConfig& config, const H1Context& ctx) {
    std::vector<CriterionResult> out;
    const auto start = Clock::now();
    const int q_h1 = ctx.algebra.homogeneous_dimension();

    std::ofstream csv;
    if (!config.output_dir.empty()) {
        csv.open(config.output_dir + "/decay.csv");
        csv << "group,a,shell_radius,mean_abs,fitted_slope\n";
    }
    auto fit_and_dump = [&](const GradedLieAlgebra& algebra, const BesselTable& table,
                            const std::string& group, double a) {
        const GridSpec& spec = table.values.spec();
        double l_min = spec.length[0];
        for (double L : spec.length) l_min = std::min(l_min, L);
        FitReport fit = decay_exponent(algebra, table.values, 3.0 * spec.max_spacing(),
                                       0.5 * l_min);
        if (csv.is_open()) {
            ShellData shells = shell_profile(algebra, table.values, fit.r_min, fit.r_max, 14);
            for (std::size_t b = 0; b < shells.radius.size(); ++b)
                if (shells.count[b] > 0)
                    csv << group << "," << a << "," << shells.radius[b] << ","
                        << shells.mean_abs[b] << "," << fit.slope << "\n";
        }
        return fit;
    };

    for (const auto& [table, a] : {std::make_pair(&ctx.b1, 1.0), std::make_pair(&ctx.b2, 2.0)}) {
        FitReport fit = fit_and_dump(ctx.algebra, *table, "heisenberg:1", a);
        out.push_back(make_bound(8, "kernel decay slope error, B_" + std::to_string(int(a)),
                                 "heisenberg:1", std::abs(fit.slope + (q_h1 - a)), 0.3,
                                 seconds_since(start),
                                 "slope " + std::to_string(fit.slope) + " target " +
                                     std::to_string(-(q_h1 - a))));
    }

    // Abelian cross-check: slopes -(n - a).
    GradedLieAlgebra ab = catalog_group("abelian:3");
    GroupLawTable ab_law(ab);
    OperatorAlgebra ab_ops(ab_law);
    auto lap = ab_ops.rockland(RocklandVariant::Alternating, 1);
    const double gs = config.grid_scale;
    GridSpec ab_grid({6.0, 6.0, 6.0}, {scaled(gs, 45), scaled(gs, 45), scaled(gs, 45)});
    HeatConfig hc;
    hc.snapshot_times = {0.8};
    HeatRun ab_run = heat_solve(ab_law, lap, ab_grid, hc);
    for (double a : {1.0, 2.0}) {
        BesselTable table = bessel_potential(ab, ab_run, 0, a, ctx.bessel_config);
        FitReport fit = fit_and_dump(ab, table, "abelian:3", a);
        out.push_back(make_bound(8, "kernel decay slope error, abelian B_" + std::to_string(int(a)),
                                 "abelian:3", std::abs(fit.slope + (3 - a)), 0.3,
                                 seconds_since(start),
                                 "slope " + std::to_string(fit.slope) + " target " +
                                     std::to_string(-(3 - a))));
    }
    return out;
}

CriterionResult bessel_semigroup_result(const SuiteConfig& config, const H1Context& ctx) {
    (void)config;
    const auto start = Clock::now();
    SemigroupReport rep = semigroup_check(ctx.law, ctx.b1, ctx.b1, ctx.b2);
    return make_bound(9, "bessel semigroup |B1*B1 - B2|_1 / |B2|_1", "heisenberg:1",
                      rep.relative_l1_error, 0.05, seconds_since(start));
}

CriterionResult sobolev_result(const SuiteConfig& config, H1Context& ctx) {
    const auto start = Clock::now();
    const GridSpec& spec = ctx.fine_grid;
    double worst = 0.0;
    std::mt19937_64 seeds(config.seed ^ 0xf00d);
    for (int trial = 0; trial < 50; ++trial) {
        GridFunction f = random_bumps(spec, seeds(), {3, 5.0, 0.45, 0.0, -1});
        SobolevEmbeddingReport rep =
            sobolev_inequality_check(ctx.ops, ctx.sub, ctx.b4, f, 4);
        worst = std::max(worst, rep.ratio);
    }
    return make_bound(10, "sobolev embedding ratio |f|_inf / (C4 |f|_{L2_4})", "heisenberg:1",
                      worst, 1.1, seconds_since(start),
                      "C4 = " + std::to_string(ctx.b4.l2_norm));
}

}  // namespace

std::vector<CriterionResult> criterion_heat(const SuiteConfig& config) {
    H1Context ctx(config);
    return heat_results(config, ctx);
}

std::vector<CriterionResult> criterion_decay(const SuiteConfig& config) {
    H1Context ctx(config);
    return decay_results(config, ctx);
}

CriterionResult criterion_bessel_semigroup(const SuiteConfig& config) {
    H1Context ctx(config);
    return bessel_semigroup_result(config, ctx);
}

CriterionResult criterion_sobolev_embedding(const SuiteConfig& config) {
    H1Context ctx(config);
    return sobolev_result(config, ctx);
}

std::vector<CriterionResult> criterion_representation(const SuiteConfig& config) {
    std::vector<CriterionResult> out;
    GradedLieAlgebra algebra = catalog_group("heisenberg:1");
    GroupLawTable law(algebra);

    {
        const auto start = Clock::now();
        std::mt19937_64 rng(config.seed ^ 0xbead);
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        const int n = 64;
        double worst_hom = 0.0, worst_uni = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> x{coord(rng), coord(rng), coord(rng)};
            std::vector<double> y{coord(rng), coord(rng), coord(rng)};
            RepMatrix a = schrodinger_rep(1.0, x, n);
            RepMatrix b = schrodinger_rep(1.0, y, n);
            worst_uni = std::max(worst_uni, a.unitarity_defect(n / 2));
            RepMatrix direct = schrodinger_rep(1.0, law.product(x, y), n);
            worst_hom = std::max(worst_hom, a.multiply(b).block_distance(direct, n / 2));
        }
        const double t = seconds_since(start);
        out.push_back(make_bound(11, "representation homomorphism defect", "heisenberg:1",
                                 worst_hom, 1e-6, t));
        out.push_back(make_bound(11, "representation unitarity defect", "heisenberg:1", worst_uni,
                                 1e-6, 0.0));
    }

    {
        const auto start = Clock::now();
        const double gs = config.grid_scale;
        GridSpec spec({6.0, 6.0, 9.0}, {scaled(gs, 41), scaled(gs, 41), scaled(gs, 61)});
        auto reference = [&](double s1, double s2, double s3) {
            return GridFunction::sample(spec, [=](const std::vector<double>& x) {
                const double e = x[0] * x[0] / (2 * s1 * s1) + x[1] * x[1] / (2 * s2 * s2) +
                                 x[2] * x[2] / (2 * s3 * s3);
                return std::exp(-e) * std::cos(1.6 * x[2]);
            });
        };
        std::vector<GridFunction> refs{reference(1.0, 1.0, 1.9), reference(1.25, 0.85, 2.3)};
        std::vector<GridFunction> tests;
        std::mt19937_64 seeds(config.seed ^ 0x9a8b7c);
        for (int i = 0; i < 10; ++i)
            tests.push_back(random_bumps(spec, seeds(), {2, 5.0, 0.25, 1.6, 2}));
        PlancherelReport rep = plancherel_check_h1(refs, tests, PlancherelConfig{});
        out.push_back(make_bound(11, "plancherel relative error (10 bumps, frozen constant)",
                                 "heisenberg:1", rep.max_relative_error, 0.03,
                                 seconds_since(start),
                                 "c = " + std::to_string(rep.constant) + ", drift " +
                                     std::to_string(rep.calibration_drift)));

        const auto it_start = Clock::now();
        GridFunction f = GridFunction::sample(spec, [](const std::vector<double>& x) {
            const double e = (x[0] - 0.4) * (x[0] - 0.4) / 2.0 +
                             (x[1] + 0.3) * (x[1] + 0.3) / 2.42 + x[2] * x[2] / 6.48;
            return std::exp(-e) * std::cos(1.2 * x[2]);
        });
        double worst = 0.0;
        for (double lambda : {0.8, 1.3}) {
            IntertwiningReport irep = intertwining_check_h1(law, f, lambda, 56);
            worst = std::max(worst, irep.relative_error);
        }
        out.push_back(make_bound(11, "generator intertwining relative error", "heisenberg:1",
                                 worst, 0.03, seconds_since(it_start)));
    }
    return out;
}

void write_suite_report(const std::vector<CriterionResult>& results, const SuiteConfig& config,
                        const std::string& path) {
    nlohmann::json doc;
    doc["seed"] = config.seed;
    doc["grid_scale"] = config.grid_scale;
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json j;
        j["criterion"] = r.id;
        j["name"] = r.name;
        j["group"] = r.group;
        j["value"] = r.value;
        j["threshold"] = r.threshold;
        j["comparison"] = r.comparison;
        j["pass"] = r.pass;
        j["seconds"] = r.seconds;
        if (!r.details.empty()) j["details"] = r.details;
        arr.push_back(std::move(j));
        all = all && r.pass;
    }
    doc["criteria"] = std::move(arr);
    doc["all_pass"] = all;
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& config) {
    if (!config.output_dir.empty())
        std::filesystem::create_directories(config.output_dir);

    std::vector<CriterionResult> results;
    auto emit = [&](CriterionResult r) {
        std::printf("[%s] criterion %2d: %-58s %s %12.6g vs %g (%.1fs)\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.comparison.c_str(),
                    r.value, r.threshold, r.seconds);
        std::fflush(stdout);
        results.push_back(std::move(r));
    };

    const auto t_start = Clock::now();
    emit(criterion_bch_axioms(config));
    emit(criterion_duality(config));
    emit(criterion_qalpha_identities(config));
    for (auto& r : criterion_leibniz(config)) emit(std::move(r));
    emit(criterion_composition(config));
    emit(criterion_abelian_reduction(config));
    const double symbolic_seconds = seconds_since(t_start);

    if (!config.symbolic_only) {
        H1Context ctx(config);
        for (auto& r : heat_results(config, ctx)) emit(std::move(r));
        for (auto& r : decay_results(config, ctx)) emit(std::move(r));
        emit(bessel_semigroup_result(config, ctx));
        emit(sobolev_result(config, ctx));
        for (auto& r : criterion_representation(config)) emit(std::move(r));
    }

    const double total_seconds = seconds_since(t_start);
    emit(make_bound(12, "symbolic portion wall time (s)", "suite", symbolic_seconds, 120.0,
                    symbolic_seconds));
    if (!config.symbolic_only)
        emit(make_bound(12, "full suite wall time (s)", "suite", total_seconds, 600.0,
                        total_seconds));

    if (!config.output_dir.empty())
        write_suite_report(results, config, config.output_dir + "/summary.json");
    return results;
}

}  // namespace nilcalc
