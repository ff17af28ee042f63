#include "nilcalc/decay.hpp"

#include <cmath>
#include <stdexcept>

namespace nilcalc {

FitReport decay_exponent(const GradedLieAlgebra& algebra, const GridFunction& f, double r_min,
                         double r_max, int bins) {
    const GridSpec& spec = f.spec();
    const double h_max = spec.max_spacing();
    double l_min = spec.length[0];
    for (double L : spec.length) l_min = std::min(l_min, L);
    if (r_min < 3.0 * h_max - 1e-12)
        throw std::invalid_argument("decay fit: r_min below 3 h (mollification core)");
    if (r_max > 0.5 * l_min + 1e-12)
        throw std::invalid_argument("decay fit: r_max beyond L/2 (boundary region)");

    ShellData shells = shell_profile(algebra, f, r_min, r_max, bins);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int b = 0; b < bins; ++b) {
        if (shells.count[b] == 0 || shells.mean_abs[b] <= 0.0) continue;
        const double x = std::log(shells.radius[b]);
        const double y = std::log(shells.mean_abs[b]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 6) throw std::invalid_argument("decay fit: fewer than 6 populated shells");

    FitReport report;
    report.shells = m;
    report.r_min = r_min;
    report.r_max = r_max;
    const double denom = m * sxx - sx * sx;
    report.slope = (m * sxy - sx * sy) / denom;
    report.intercept = (sy - report.slope * sx) / m;
    double ss = 0.0;
    for (int b = 0; b < bins; ++b) {
        if (shells.count[b] == 0 || shells.mean_abs[b] <= 0.0) continue;
        const double x = std::log(shells.radius[b]);
        const double y = std::log(shells.mean_abs[b]);
        const double e = y - (report.intercept + report.slope * x);
        ss += e * e;
    }
    report.residual = std::sqrt(ss / m);
    return report;
}

}  // namespace nilcalc
