#pragma once

#include "nilcalc/grid.hpp"
#include "nilcalc/group_law.hpp"

#include <complex>
#include <vector>

namespace nilcalc {

/// Matrix of an operator on the first N lambda-scaled Hermite functions.
struct RepMatrix {
    double lambda = 1.0;
    int n = 0;
    std::vector<std::complex<double>> entries;  // row-major, entries[j*n+k]

    std::complex<double> at(int j, int k) const { return entries[j * n + k]; }
    std::complex<double>& at(int j, int k) { return entries[j * n + k]; }

    RepMatrix multiply(const RepMatrix& other) const;
    RepMatrix adjoint() const;
    /// max |(this - other)_{jk}| over the lower block j,k < block.
    double block_distance(const RepMatrix& other, int block) const;
    /// max |(U* U - I)_{jk}| over the lower block.
    double unitarity_defect(int block) const;
    double hs_norm_block(int block) const;
};

/// Schroedinger realization on L^2(R) for the catalog heisenberg:1 group law
/// (x*y)_3 = x3 + y3 + (x1 y2 - x2 y1)/2:
///   pi_lambda(x) phi(u) = exp(i lambda (x3 + x2 u + x1 x2 / 2)) phi(u + x1),
/// so pi(X1) = d/du, pi(X2) = i lambda u, pi(X3) = i lambda, and
/// pi(-(X1^2+X2^2)) is the harmonic oscillator with spectrum
/// |lambda| (2k+1) on the scaled Hermite basis.  The phase convention is
/// locked by the homomorphism/unitarity self-tests, not imported.
RepMatrix schrodinger_rep(double lambda, const std::vector<double>& x, int n,
                          double quadrature_du = 0.02);

/// Group Fourier transform f^(pi_lambda) = Int f(x) pi_lambda(x)^* dx of a
/// sampled function, realized as the integral operator with kernel
/// K(u,v) = F(u-v, (u+v)/2) where F stacks the central-axis and x2
/// transforms of f; the matrix is the Hermite projection of K.
RepMatrix group_fourier_h1(const GridFunction& f, double lambda, int n);

/// Squared Hilbert-Schmidt norm of f^(pi_lambda) from the kernel K itself
/// (no basis truncation).
double fourier_hs_norm_sq(const GridFunction& f, double lambda);

/// Ladder matrices of the derived representation on the scaled basis.
RepMatrix rep_derived_x1(double lambda, int n);  // d/du
RepMatrix rep_derived_x2(double lambda, int n);  // i lambda u
RepMatrix rep_derived_x3(double lambda, int n);  // i lambda

struct PlancherelConfig {
    double lambda_min = 0.25;
    double lambda_max = 4.5;
    int lambda_samples = 34;
};

struct PlancherelReport {
    double constant = 0.0;       // calibrated c in ||f||^2 = c Int ||f^||_HS^2 |l| dl
    double calibration_drift = 0.0;
    std::vector<double> relative_errors;
    double max_relative_error = 0.0;
};

/// Calibrates the Plancherel constant on two reference Gaussians (drift
/// beyond 1% throws: convention bug), then freezes it and reports the
/// relative error on the supplied test functions.  Real-valued f: the
/// lambda integral runs over lambda > 0 and doubles.
PlancherelReport plancherel_check_h1(const std::vector<GridFunction>& references,
                                     const std::vector<GridFunction>& tests,
                                     const PlancherelConfig& config);

struct IntertwiningReport {
    double lambda = 0.0;
    double relative_error = 0.0;  // worst over the three generators
};

/// Checks (X_j f)^(pi_l) = pi_l(X_j) f^(pi_l) on the truncation-safe block;
/// X_j f is computed with centered differences on the grid.
IntertwiningReport intertwining_check_h1(const GroupLawTable& law, const GridFunction& f,
                                         double lambda, int n);

}  // namespace nilcalc
