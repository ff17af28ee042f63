#pragma once

#include "nilcalc/fd_ops.hpp"
#include "nilcalc/grid.hpp"
#include "nilcalc/operators.hpp"

#include <vector>

namespace nilcalc {

struct HeatConfig {
    std::vector<double> snapshot_times;  // solver times (mollifier time added on report)
    double dt_hint = 0.0;                // 0 -> seed from the Gershgorin estimate
    int max_halvings = 12;
    double blowup_factor = 20.0;         // sup-norm growth that aborts a trial
};

struct HeatRun {
    RocklandSpec rockland;
    GridSpec grid;
    double dt = 0.0;
    double mollifier_time = 0.0;            // equivalent diffusion time of the datum
    std::vector<double> times;              // effective times: solver + mollifier
    std::vector<GridFunction> snapshots;
    std::vector<double> mass;               // integral per snapshot
};

/// Explicit RK4 integration of d_t u = -R u from a unit-mass Gaussian
/// mollifier whose per-axis width follows the dilation scaling
/// sigma_j ~ t0^{w_j/nu} (resolvable: at least three cells per axis).
/// The step is halved until a stable run is observed.
HeatRun heat_solve(const GroupLawTable& law, const RocklandSpec& rockland, const GridSpec& grid,
                   const HeatConfig& config);

struct ScalingReport {
    double t1 = 0.0, t2 = 0.0;
    double max_relative_deviation = 0.0;
    double amplitude_floor = 0.0;
    int compared_nodes = 0;
};

/// Self-similarity of the heat kernel: compares the snapshot at t2 with
/// (t2/t1)^{-Q/nu} u_{t1}(dilate((t2/t1)^{-1/nu}, x)) on interior nodes above
/// `floor_fraction` of the peak.
ScalingReport heat_scaling_check(const GradedLieAlgebra& algebra, const HeatRun& run,
                                 std::size_t snap1, std::size_t snap2,
                                 double floor_fraction = 0.05);

}  // namespace nilcalc
