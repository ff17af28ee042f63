#include "nilcalc/heat.hpp"

#include "nilcalc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nilcalc {

namespace {

bool finite_and_bounded(const std::vector<double>& v, double bound) {
    for (double x : v)
        if (!std::isfinite(x) || std::abs(x) > bound) return false;
    return true;
}

}  // namespace

HeatRun heat_solve(const GroupLawTable& law, const RocklandSpec& rockland, const GridSpec& grid,
                   const HeatConfig& config) {
    if (config.snapshot_times.empty()) throw std::invalid_argument("heat: no snapshot times");
    const auto& g = law.algebra();
    const int d = grid.dim();
    const double nu = rockland.degree;

    // Mollifier: per-axis sigma_j = s_j * t0^{w_j/nu} with the dilation
    // scaling of the kernel.  t0 is matched on the weight-1 axes (at least
    // 2.5 cells); higher-weight axes get a resolvability floor of 1.2 cells,
    // a shape excess that shrinks under grid refinement.
    auto axis_scale = [&](int axis) { return g.weights()[axis] == 1 ? std::sqrt(2.0) : 1.0; };
    double t0 = 0.0;
    bool any_weight_one = false;
    for (int axis = 0; axis < d; ++axis) {
        const double target = 2.5 * grid.spacing(axis);
        const double expo = static_cast<double>(nu) / g.weights()[axis];
        if (g.weights()[axis] == 1) {
            any_weight_one = true;
            t0 = std::max(t0, std::pow(target / axis_scale(axis), expo));
        }
    }
    if (!any_weight_one) {
        for (int axis = 0; axis < d; ++axis) {
            const double target = 2.5 * grid.spacing(axis);
            t0 = std::max(t0, std::pow(target, nu / static_cast<double>(g.weights()[axis])));
        }
    }
    std::vector<double> sigma(d);
    for (int axis = 0; axis < d; ++axis) {
        sigma[axis] = axis_scale(axis) * std::pow(t0, g.weights()[axis] / nu);
        sigma[axis] = std::max(sigma[axis], 1.2 * grid.spacing(axis));
    }
    GridFunction u0 = gaussian_profile(grid, sigma);

    FdOperator rhs_op(law, rockland.op, grid);
    double dt = config.dt_hint;
    if (dt <= 0.0) {
        const double lam = rhs_op.gershgorin_estimate();
        dt = lam > 0.0 ? 2.0 / lam : 1e-2;
    }
    std::vector<double> times = config.snapshot_times;
    std::sort(times.begin(), times.end());
    const double t_final = times.back();
    const double bound = config.blowup_factor * u0.linf_norm();

    for (int attempt = 0;; ++attempt) {
        HeatRun run;
        run.rockland = rockland;
        run.grid = grid;
        run.dt = dt;
        run.mollifier_time = t0;

        const std::size_t n = grid.total();
        std::vector<double> u = u0.values();
        std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
        auto rhs = [&](const std::vector<double>& in, std::vector<double>& out) {
            rhs_op.apply_into(in, out);
            for (auto& v : out) v = -v;
        };

        double t = 0.0;
        std::size_t next_snap = 0;
        bool stable = true;
        long steps_since_check = 0;
        while (next_snap < times.size()) {
            // Land exactly on snapshot times.
            double step = dt;
            bool snap_here = false;
            if (t + step >= times[next_snap] - 1e-12) {
                step = times[next_snap] - t;
                snap_here = true;
            }
            if (step > 1e-15) {
                rhs(u, k1);
                for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * step * k1[i];
                rhs(tmp, k2);
                for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * step * k2[i];
                rhs(tmp, k3);
                for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + step * k3[i];
                rhs(tmp, k4);
                for (std::size_t i = 0; i < n; ++i)
                    u[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                t += step;
            }
            if (++steps_since_check >= 10 || snap_here) {
                steps_since_check = 0;
                if (!finite_and_bounded(u, bound)) {
                    stable = false;
                    break;
                }
            }
            if (snap_here) {
                GridFunction snap(grid);
                snap.values() = u;
                run.mass.push_back(snap.integral());
                run.snapshots.push_back(std::move(snap));
                run.times.push_back(t0 + times[next_snap]);
                ++next_snap;
            }
        }
        if (stable) return run;
        dt *= 0.5;
        if (attempt >= config.max_halvings)
            throw std::runtime_error(
                "heat: unstable through " + std::to_string(config.max_halvings) +
                " step halvings; decrease dt or refine the grid (final dt " +
                std::to_string(dt) + ", t reached " + std::to_string(t_final) + ")");
    }
}

ScalingReport heat_scaling_check(const GradedLieAlgebra& algebra, const HeatRun& run,
                                 std::size_t snap1, std::size_t snap2, double floor_fraction) {
    const GridFunction& u1 = run.snapshots.at(snap1);
    const GridFunction& u2 = run.snapshots.at(snap2);
    const double t1 = run.times.at(snap1), t2 = run.times.at(snap2);
    const double nu = run.rockland.degree;
    const double q = algebra.homogeneous_dimension();

    ScalingReport report;
    report.t1 = t1;
    report.t2 = t2;
    const double ratio = t2 / t1;
    const double scale = std::pow(ratio, -q / nu);     // amplitude factor
    const double dil = std::pow(ratio, -1.0 / nu);     // argument dilation
    report.amplitude_floor = floor_fraction * u2.linf_norm();

    const GridSpec& spec = u2.spec();
    const int d = spec.dim();
    // One-cell margin keeps the interpolation stencil inside the box.
    double worst = 0.0;
    int compared = 0;
    for (std::size_t i = 0; i < spec.total(); ++i) {
        auto idx = spec.unflat(i);
        bool interior = true;
        for (int axis = 0; axis < d; ++axis)
            if (idx[axis] < 1 || idx[axis] >= spec.npoints[axis] - 1) interior = false;
        if (!interior) continue;
        const double reference = u2[i];
        if (std::abs(reference) < report.amplitude_floor) continue;
        auto x = spec.point_flat(i);
        const auto scaled_point = dilate(algebra, dil, x);
        const double predicted = scale * u1.interpolate_cubic(scaled_point);
        worst = std::max(worst, std::abs(predicted - reference) / std::abs(reference));
        ++compared;
    }
    report.max_relative_deviation = worst;
    report.compared_nodes = compared;
    return report;
}

}  // namespace nilcalc
