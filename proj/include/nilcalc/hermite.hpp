#pragma once

#include <vector>

namespace nilcalc {

/// Values of the orthonormal Hermite functions psi_0..psi_{n-1} at u
/// (three-term recurrence).
std::vector<double> hermite_values(int n, double u);

/// Ladder coefficients: u psi_k = lo(k) psi_{k-1} + hi(k) psi_{k+1} and
/// psi_k' = lo(k) psi_{k-1} - hi(k) psi_{k+1} with lo(k) = sqrt(k/2),
/// hi(k) = sqrt((k+1)/2).
double hermite_ladder_lo(int k);
double hermite_ladder_hi(int k);

}  // namespace nilcalc
