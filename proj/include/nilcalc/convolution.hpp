#pragma once

#include "nilcalc/grid.hpp"
#include "nilcalc/group_law.hpp"

#include <utility>
#include <vector>

namespace nilcalc {

struct ConvolutionResult {
    GridFunction value;
    double boundary_mass_fraction = 0.0;  // max of the two inputs
    bool boundary_warning = false;
};

/// Group convolution (f1 * f2)(x) = sum_y f1(y) f2(y^{-1} x) prod h_j on a
/// common grid.  Dispatches on the group: plain padded-transform convolution
/// for abelian groups, a central-axis transform with twisted planar
/// convolution for heisenberg:1 (trigonometric interpolation in the central
/// variable), and the direct double sum elsewhere (small grids only).
ConvolutionResult group_convolve(const GroupLawTable& law, const GridFunction& f1,
                                 const GridFunction& f2);

/// Direct double sum with multilinear interpolation for off-grid reads;
/// exact mirror of the defining quadrature.  O(total^2) — oracle use.
GridFunction group_convolve_direct(const GroupLawTable& law, const GridFunction& f1,
                                   const GridFunction& f2);

/// Finite separable kernel family kappa(x, z) = sum_i c_i(x) kappa_i(z).
/// An x-independent kernel is a single term with c == 1.
struct SeparableKernel {
    std::vector<std::pair<GridFunction, GridFunction>> terms;  // (c_i(x), kappa_i)

    static SeparableKernel invariant(GridFunction kappa);
};

/// Quantization from kernel samples: T f(x) = sum_i c_i(x) (f * kappa_i)(x).
/// With a single unit-coefficient term this is exactly group_convolve.
GridFunction quantize_kernel(const GroupLawTable& law, const SeparableKernel& kernel,
                             const GridFunction& f);

}  // namespace nilcalc
