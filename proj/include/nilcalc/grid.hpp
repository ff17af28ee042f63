#pragma once

#include "nilcalc/algebra.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace nilcalc {

/// Uniform symmetric coordinate box [-L_j, L_j] with N_j nodes per axis.
struct GridSpec {
    std::vector<double> length;
    std::vector<int> npoints;

    GridSpec() = default;
    GridSpec(std::vector<double> l, std::vector<int> n);

    int dim() const { return static_cast<int>(length.size()); }
    double spacing(int axis) const { return 2.0 * length[axis] / (npoints[axis] - 1); }
    double coord(int axis, int index) const { return -length[axis] + index * spacing(axis); }
    std::size_t total() const;
    double cell_volume() const;
    double max_spacing() const;

    std::size_t flat(const std::vector<int>& idx) const;
    std::vector<int> unflat(std::size_t flat_index) const;
    std::vector<double> point(const std::vector<int>& idx) const;
    std::vector<double> point_flat(std::size_t flat_index) const;

    /// Same box with every axis count scaled by `factor` (rounded).
    GridSpec refined(double factor) const;

    bool operator==(const GridSpec&) const = default;
};

/// Sampled real function on a GridSpec; all norms use the rectangle rule
/// with weight prod h_j.
class GridFunction {
  public:
    GridFunction() = default;
    explicit GridFunction(GridSpec spec)
        : spec_(std::move(spec)), values_(spec_.total(), 0.0) {}

    static GridFunction sample(const GridSpec& spec,
                               const std::function<double(const std::vector<double>&)>& fn);

    const GridSpec& spec() const { return spec_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    double integral() const;
    double l1_norm() const;
    double l2_norm() const;
    double linf_norm() const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(double c);
    GridFunction operator-(const GridFunction& other) const;

    /// Pointwise product with a sampled field.
    GridFunction multiplied(const GridFunction& other) const;

    /// Multilinear interpolation; zero outside the box.
    double interpolate(const std::vector<double>& point) const;

    /// Separable Catmull-Rom (4-point) interpolation; zero extension beyond
    /// the box.  Used where the linear stencil error would dominate a
    /// comparison (heat self-similarity).
    double interpolate_cubic(const std::vector<double>& point) const;

    /// Fraction of the L1 mass sitting on the outermost node shell; used to
    /// flag convolutions whose integrands do not decay inside the box.
    double boundary_mass_fraction() const;

  private:
    GridSpec spec_;
    std::vector<double> values_;
};

/// Sum of seeded random Gaussian bumps, optionally modulated in one axis:
/// sum_i A_i exp(-sum_j (x_j-c_{ij})^2/(2 s_{ij}^2)) * cos(omega x_m + phi_i).
struct BumpConfig {
    int count = 3;
    double min_width_cells = 4.0;  // widths at least this many grid spacings
    double center_fraction = 0.5;  // centers within this fraction of the box
    double modulation_omega = 0.0;
    int modulation_axis = -1;
};

GridFunction random_bumps(const GridSpec& spec, std::uint64_t seed, const BumpConfig& config);

/// Isotropic-in-dilated-coordinates Gaussian with per-axis standard
/// deviations; normalized to unit integral on the grid.
GridFunction gaussian_profile(const GridSpec& spec, const std::vector<double>& sigma);

/// Shell-averaged |f| against the homogeneous norm: nodes binned by
/// log |x|_{nu_o} between r_min and r_max.
struct ShellData {
    std::vector<double> radius;    // geometric bin midpoints
    std::vector<double> mean_abs;  // mean |f| per bin
    std::vector<int> count;
};
ShellData shell_profile(const GradedLieAlgebra& algebra, const GridFunction& f, double r_min,
                        double r_max, int bins);

}  // namespace nilcalc
