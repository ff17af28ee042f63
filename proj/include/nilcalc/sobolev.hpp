#pragma once

#include "nilcalc/bessel.hpp"
#include "nilcalc/fd_ops.hpp"
#include "nilcalc/symbols.hpp"

namespace nilcalc {

/// Equivalent-norm route sum_{[alpha]<=a} ||X^alpha f||_{L^2}; documented for
/// a in the lattice nu * N_0 where the equivalence holds.
double sobolev_norm(const GroupLawTable& law, const GridFunction& f, int a);

/// Graph-norm route ||(Id + R)^{a/nu} f||_{L^2} for a/nu a nonnegative
/// integer (the operator power is composed symbolically, then applied with
/// centered differences).
double sobolev_graph_norm(OperatorAlgebra& ops, const RocklandSpec& rockland,
                          const GridFunction& f, int a);

struct SobolevEmbeddingReport {
    double ratio = 0.0;       // ||f||_inf / (C_a ||f||_{L^2_a})
    double constant = 0.0;    // C_a = ||B_a||_{L^2}
    double sup_norm = 0.0;
    double sobolev = 0.0;
};

/// Checks ||f||_inf <= C_a ||(Id+R)^{a/nu} f||_{L^2} with the computed
/// Bessel constant; a > Q/2 and a in nu N_0 required.
SobolevEmbeddingReport sobolev_inequality_check(OperatorAlgebra& ops, const RocklandSpec& rockland,
                                                const BesselTable& bessel_a, const GridFunction& f,
                                                int a);

/// ||q~_alpha (Id+R)^k kappa||_{L^1}: computable surrogate for the
/// operator-norm seminorms of T_kappa (gamma = 0 slice).
double l1_seminorm_bound(OperatorAlgebra& ops, const DualBasisTable& dual,
                         const RocklandSpec& rockland, const GridFunction& kappa,
                         const MultiIndex& alpha, int k);

/// sup over lambda and k1 <= k of (1+lambda)^{-m+k1} |d^{k1} phi| on a
/// log-spaced lambda grid, derivatives by centered differences in log
/// lambda.
double multiplier_seminorm(const std::vector<double>& lambda_grid,
                           const std::vector<double>& phi_samples, double m, int k);

}  // namespace nilcalc
