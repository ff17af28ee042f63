#include "nilcalc/sobolev.hpp"

#include <cmath>
#include <stdexcept>

namespace nilcalc {

double sobolev_norm(const GroupLawTable& law, const GridFunction& f, int a) {
    if (a < 0) throw std::domain_error("sobolev_norm: a must be nonnegative");
    const auto& g = law.algebra();
    double total = 0.0;
    for (const auto& alpha : indices_up_to_degree(g.weights(), a)) {
        InvariantOperator mono =
            InvariantOperator::monomial(g.dim(), alpha, Rational(1));
        FdOperator fd(law, mono, f.spec());
        total += fd.apply(f).l2_norm();
    }
    return total;
}

double sobolev_graph_norm(OperatorAlgebra& ops, const RocklandSpec& rockland,
                          const GridFunction& f, int a) {
    if (a % rockland.degree != 0)
        throw std::domain_error("sobolev_graph_norm: a must be a multiple of the operator degree");
    const int power = a / rockland.degree;
    const auto& vars = ops.group_vars();
    VarCoeffOperator acc = VarCoeffOperator::identity(vars);
    VarCoeffOperator id_plus_r = VarCoeffOperator::identity(vars);
    id_plus_r += VarCoeffOperator::from_invariant(vars, rockland.op);
    for (int p = 0; p < power; ++p) acc = ops.compose(acc, id_plus_r);
    FdOperator fd(ops.law(), acc, f.spec());
    return fd.apply(f).l2_norm();
}

SobolevEmbeddingReport sobolev_inequality_check(OperatorAlgebra& ops, const RocklandSpec& rockland,
                                                const BesselTable& bessel_a, const GridFunction& f,
                                                int a) {
    const int q = ops.algebra().homogeneous_dimension();
    if (2 * a <= q) throw std::domain_error("sobolev embedding needs a > Q/2");
    SobolevEmbeddingReport report;
    report.constant = bessel_a.l2_norm;
    report.sup_norm = f.linf_norm();
    report.sobolev = sobolev_graph_norm(ops, rockland, f, a);
    const double denom = report.constant * report.sobolev;
    report.ratio = denom > 0.0 ? report.sup_norm / denom : 0.0;
    return report;
}

double l1_seminorm_bound(OperatorAlgebra& ops, const DualBasisTable& dual,
                         const RocklandSpec& rockland, const GridFunction& kappa,
                         const MultiIndex& alpha, int k) {
    if (k < 0) throw std::domain_error("l1_seminorm_bound: k must be nonnegative");
    const auto& vars = ops.group_vars();
    VarCoeffOperator acc = VarCoeffOperator::identity(vars);
    VarCoeffOperator id_plus_r = VarCoeffOperator::identity(vars);
    id_plus_r += VarCoeffOperator::from_invariant(vars, rockland.op);
    for (int p = 0; p < k; ++p) acc = ops.compose(acc, id_plus_r);
    FdOperator fd(ops.law(), acc, kappa.spec());
    GridFunction work = fd.apply(kappa);

    const Polynomial q_tilde = dual.q_tilde(alpha);
    const GridSpec& spec = kappa.spec();
    for (std::size_t i = 0; i < spec.total(); ++i)
        work[i] *= q_tilde.evaluate_double(spec.point_flat(i));
    return work.l1_norm();
}

double multiplier_seminorm(const std::vector<double>& lambda_grid,
                           const std::vector<double>& phi_samples, double m, int k) {
    const int n = static_cast<int>(lambda_grid.size());
    if (n < 5 || phi_samples.size() != lambda_grid.size())
        throw std::invalid_argument("multiplier_seminorm: need matched grids with >= 5 nodes");
    if (k > 2) throw std::invalid_argument("multiplier_seminorm: derivatives beyond 2 untabulated");

    // d/dlambda = (1/lambda) d/ds on the log grid s = log lambda.
    const double ds = std::log(lambda_grid[1] / lambda_grid[0]);
    auto d1 = [&](const std::vector<double>& v, int i) {
        return (v[i + 1] - v[i - 1]) / (2.0 * ds);
    };
    auto d2 = [&](const std::vector<double>& v, int i) {
        return (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (ds * ds);
    };

    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lam = lambda_grid[i];
        sup = std::max(sup, std::pow(1.0 + lam, -m) * std::abs(phi_samples[i]));
        if (k >= 1 && i >= 1 && i + 1 < n) {
            const double dphi = d1(phi_samples, i) / lam;
            sup = std::max(sup, std::pow(1.0 + lam, -m + 1) * std::abs(dphi));
        }
        if (k >= 2 && i >= 1 && i + 1 < n) {
            const double dphi_ds = d1(phi_samples, i);
            const double d2phi_ds = d2(phi_samples, i);
            // d^2/dlambda^2 = (1/lambda^2)(d^2/ds^2 - d/ds).
            const double d2phi = (d2phi_ds - dphi_ds) / (lam * lam);
            sup = std::max(sup, std::pow(1.0 + lam, -m + 2) * std::abs(d2phi));
        }
    }
    return sup;
}

}  // namespace nilcalc
