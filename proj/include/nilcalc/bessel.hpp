#pragma once

#include "nilcalc/convolution.hpp"
#include "nilcalc/heat.hpp"

namespace nilcalc {

struct BesselConfig {
    double t_min = 1e-3;
    double t_max = 24.0;
    int t_samples = 96;
    /// Refinement guard: relative L1 change when the t-grid doubles.
    double quadrature_tolerance = 5e-3;
};

struct BesselTable {
    double a = 0.0;
    int nu = 0;
    GridFunction values;
    double l1_norm = 0.0;
    double l2_norm = 0.0;
    /// Gamma(Re a/nu)/|Gamma(a/nu)| * ||h||_L1 — the analytic L1 bound
    /// computed from the reference kernel mass (real a: just ||h||_L1).
    double l1_bound = 0.0;
};

/// B_a = Gamma(a/nu)^{-1} Int_0^inf t^{a/nu - 1} e^{-t} h_t dt, evaluated by
/// log-spaced quadrature.  h_t is generated from a reference snapshot u_ref
/// at effective time t_ref through the kernel scaling
/// h_t(x) = (t/t_ref)^{-Q/nu} u_ref(dilate((t/t_ref)^{-1/nu}, x)).
/// Throws when doubling the t-grid moves the L1 norm by more than the
/// configured tolerance (quadrature too coarse).
BesselTable bessel_potential(const GradedLieAlgebra& algebra, const HeatRun& run,
                             std::size_t reference_snapshot, double a, const BesselConfig& config);

/// Relative L1 error of B_a * B_b against B_{a+b}.
struct SemigroupReport {
    double a = 0.0, b = 0.0;
    double relative_l1_error = 0.0;
    bool boundary_warning = false;
};
SemigroupReport semigroup_check(const GroupLawTable& law, const BesselTable& ba,
                                const BesselTable& bb, const BesselTable& bab);

}  // namespace nilcalc
