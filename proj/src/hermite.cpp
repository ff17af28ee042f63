#include "nilcalc/hermite.hpp"

#include <cmath>
#include <numbers>

namespace nilcalc {

std::vector<double> hermite_values(int n, double u) {
    std::vector<double> psi(n, 0.0);
    if (n == 0) return psi;
    const double g = std::exp(-0.5 * u * u);
    psi[0] = std::pow(std::numbers::pi, -0.25) * g;
    if (n == 1) return psi;
    psi[1] = std::sqrt(2.0) * u * psi[0];
    for (int k = 2; k < n; ++k)
        psi[k] = std::sqrt(2.0 / k) * u * psi[k - 1] - std::sqrt((k - 1.0) / k) * psi[k - 2];
    return psi;
}

double hermite_ladder_lo(int k) { return std::sqrt(k / 2.0); }

double hermite_ladder_hi(int k) { return std::sqrt((k + 1) / 2.0); }

}  // namespace nilcalc
