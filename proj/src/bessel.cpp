#include "nilcalc/bessel.hpp"

#include "nilcalc/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace nilcalc {

namespace {

GridFunction integrate_family(const GradedLieAlgebra& algebra, const GridFunction& u_ref,
                              double t_ref, double a, double nu, double q, double t_min,
                              double t_max, int samples) {
    const GridSpec& spec = u_ref.spec();
    const int d = spec.dim();
    GridFunction out(spec);
    const double s_lo = std::log(t_min), s_hi = std::log(t_max);
    const double ds = (s_hi - s_lo) / (samples - 1);
    const double gamma_inv = 1.0 / std::tgamma(a / nu);

    // Precompute the per-sample quadrature weight and per-axis dilation.
    std::vector<double> weight(samples);
    std::vector<std::vector<double>> axis_scale(samples, std::vector<double>(d));
    for (int s = 0; s < samples; ++s) {
        const double t = std::exp(s_lo + s * ds);
        const double ratio = t / t_ref;
        const double dil = std::pow(ratio, -1.0 / nu);
        const double amp = std::pow(ratio, -q / nu);
        const double trapezoid = (s == 0 || s == samples - 1) ? 0.5 : 1.0;
        weight[s] = trapezoid * std::pow(t, a / nu - 1.0) * std::exp(-t) * amp * t * ds;
        for (int axis = 0; axis < d; ++axis)
            axis_scale[s][axis] = std::pow(dil, algebra.weights()[axis]);
    }

    parallel_for(spec.total(), [&](std::size_t lo, std::size_t hi) {
        std::vector<double> x(d), y(d);
        for (std::size_t i = lo; i < hi; ++i) {
            x = spec.point_flat(i);
            double acc = 0.0;
            for (int s = 0; s < samples; ++s) {
                for (int axis = 0; axis < d; ++axis) y[axis] = axis_scale[s][axis] * x[axis];
                acc += weight[s] * u_ref.interpolate(y);
            }
            out[i] = gamma_inv * acc;
        }
    });
    return out;
}

}  // namespace

BesselTable bessel_potential(const GradedLieAlgebra& algebra, const HeatRun& run,
                             std::size_t reference_snapshot, double a, const BesselConfig& config) {
    if (a <= 0.0) throw std::domain_error("bessel: order a must be positive");
    const GridFunction& u_ref = run.snapshots.at(reference_snapshot);
    const double t_ref = run.times.at(reference_snapshot);
    const double nu = run.rockland.degree;
    const double q = algebra.homogeneous_dimension();

    GridFunction coarse = integrate_family(algebra, u_ref, t_ref, a, nu, q, config.t_min,
                                           config.t_max, config.t_samples);
    GridFunction fine = integrate_family(algebra, u_ref, t_ref, a, nu, q, config.t_min,
                                         config.t_max, 2 * config.t_samples - 1);
    const double drift =
        (fine - coarse).l1_norm() / std::max(fine.l1_norm(), 1e-300);
    if (drift > config.quadrature_tolerance)
        throw std::runtime_error("bessel: t-quadrature unstable under refinement (relative drift " +
                                 std::to_string(drift) + "); increase t_samples");

    BesselTable table;
    table.a = a;
    table.nu = run.rockland.degree;
    table.values = std::move(fine);
    table.l1_norm = table.values.l1_norm();
    table.l2_norm = table.values.l2_norm();
    table.l1_bound = run.mass.at(reference_snapshot) >= 0
                         ? std::abs(run.mass.at(reference_snapshot))
                         : 1.0;
    return table;
}

SemigroupReport semigroup_check(const GroupLawTable& law, const BesselTable& ba,
                                const BesselTable& bb, const BesselTable& bab) {
    SemigroupReport report;
    report.a = ba.a;
    report.b = bb.a;
    ConvolutionResult conv = group_convolve(law, ba.values, bb.values);
    report.boundary_warning = conv.boundary_warning;
    report.relative_l1_error =
        (conv.value - bab.values).l1_norm() / std::max(bab.values.l1_norm(), 1e-300);
    return report;
}

}  // namespace nilcalc
