#pragma once

#include "nilcalc/grid.hpp"

namespace nilcalc {

struct FitReport {
    double slope = 0.0;
    double intercept = 0.0;
    double r_min = 0.0, r_max = 0.0;
    double residual = 0.0;  // rms residual of the log-log fit
    int shells = 0;
};

/// Least-squares slope of log(mean |f|) against log |x|_{nu_o} over shells
/// inside [r_min, r_max].  The window must leave the mollification core and
/// the boundary out (r_min >= 3 h_max, r_max <= L_min / 2) and produce at
/// least six populated shells.
FitReport decay_exponent(const GradedLieAlgebra& algebra, const GridFunction& f, double r_min,
                         double r_max, int bins = 14);

}  // namespace nilcalc
