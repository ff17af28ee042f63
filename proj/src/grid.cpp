#include "nilcalc/grid.hpp"

#include "nilcalc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nilcalc {

GridSpec::GridSpec(std::vector<double> l, std::vector<int> n)
    : length(std::move(l)), npoints(std::move(n)) {
    if (length.size() != npoints.size())
        throw std::invalid_argument("grid: length/npoints size mismatch");
    for (double L : length)
        if (L <= 0) throw std::invalid_argument("grid: box half-length must be positive");
    for (int N : npoints)
        if (N < 8) throw std::invalid_argument("grid: need at least 8 points per axis");
}

std::size_t GridSpec::total() const {
    std::size_t t = 1;
    for (int N : npoints) t *= static_cast<std::size_t>(N);
    return t;
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int axis = 0; axis < dim(); ++axis) v *= spacing(axis);
    return v;
}

double GridSpec::max_spacing() const {
    double h = 0.0;
    for (int axis = 0; axis < dim(); ++axis) h = std::max(h, spacing(axis));
    return h;
}

std::size_t GridSpec::flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int axis = 0; axis < dim(); ++axis)
        f = f * static_cast<std::size_t>(npoints[axis]) + static_cast<std::size_t>(idx[axis]);
    return f;
}

std::vector<int> GridSpec::unflat(std::size_t flat_index) const {
    std::vector<int> idx(dim());
    for (int axis = dim() - 1; axis >= 0; --axis) {
        idx[axis] = static_cast<int>(flat_index % npoints[axis]);
        flat_index /= npoints[axis];
    }
    return idx;
}

std::vector<double> GridSpec::point(const std::vector<int>& idx) const {
    std::vector<double> p(dim());
    for (int axis = 0; axis < dim(); ++axis) p[axis] = coord(axis, idx[axis]);
    return p;
}

std::vector<double> GridSpec::point_flat(std::size_t flat_index) const {
    return point(unflat(flat_index));
}

GridSpec GridSpec::refined(double factor) const {
    GridSpec out = *this;
    for (auto& N : out.npoints) N = std::max(8, static_cast<int>(std::lround(N * factor)));
    return out;
}

GridFunction GridFunction::sample(const GridSpec& spec,
                                  const std::function<double(const std::vector<double>&)>& fn) {
    GridFunction g(spec);
    const std::size_t n = spec.total();
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) g.values_[i] = fn(spec.point_flat(i));
    });
    return g;
}

double GridFunction::integral() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s * spec_.cell_volume();
}

double GridFunction::l1_norm() const {
    double s = 0.0;
    for (double v : values_) s += std::abs(v);
    return s * spec_.cell_volume();
}

double GridFunction::l2_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s * spec_.cell_volume());
}

double GridFunction::linf_norm() const {
    double s = 0.0;
    for (double v : values_) s = std::max(s, std::abs(v));
    return s;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(double c) {
    for (auto& v : values_) v *= c;
    return *this;
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
    GridFunction r = *this;
    r -= other;
    return r;
}

GridFunction GridFunction::multiplied(const GridFunction& other) const {
    GridFunction r = *this;
    for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= other.values_[i];
    return r;
}

double GridFunction::interpolate(const std::vector<double>& point) const {
    constexpr int kMaxDim = 8;
    const int d = spec_.dim();
    double frac[kMaxDim];
    std::size_t stride[kMaxDim];
    std::size_t s = 1;
    for (int axis = d - 1; axis >= 0; --axis) {
        stride[axis] = s;
        s *= static_cast<std::size_t>(spec_.npoints[axis]);
    }
    std::size_t origin = 0;
    for (int axis = 0; axis < d; ++axis) {
        const double h = spec_.spacing(axis);
        const double t = (point[axis] + spec_.length[axis]) / h;
        if (t < 0.0 || t > spec_.npoints[axis] - 1) return 0.0;
        int i = static_cast<int>(t);
        if (i >= spec_.npoints[axis] - 1) i = spec_.npoints[axis] - 2;
        frac[axis] = t - i;
        origin += stride[axis] * static_cast<std::size_t>(i);
    }
    double acc = 0.0;
    const int corners = 1 << d;
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        std::size_t off = origin;
        for (int axis = 0; axis < d; ++axis) {
            const int bit = (c >> axis) & 1;
            w *= bit ? frac[axis] : 1.0 - frac[axis];
            off += bit ? stride[axis] : 0;
        }
        if (w != 0.0) acc += w * values_[off];
    }
    return acc;
}

double GridFunction::interpolate_cubic(const std::vector<double>& point) const {
    constexpr int kMaxDim = 8;
    const int d = spec_.dim();
    int base[kMaxDim];
    double w[kMaxDim][4];
    std::size_t stride[kMaxDim];
    std::size_t s = 1;
    for (int axis = d - 1; axis >= 0; --axis) {
        stride[axis] = s;
        s *= static_cast<std::size_t>(spec_.npoints[axis]);
    }
    for (int axis = 0; axis < d; ++axis) {
        const double t = (point[axis] + spec_.length[axis]) / spec_.spacing(axis);
        if (t < 0.0 || t > spec_.npoints[axis] - 1) return 0.0;
        int i = static_cast<int>(t);
        if (i >= spec_.npoints[axis] - 1) i = spec_.npoints[axis] - 2;
        const double u = t - i;
        base[axis] = i;
        w[axis][0] = -0.5 * u * (1.0 - u) * (1.0 - u);
        w[axis][1] = 1.0 + 0.5 * u * u * (3.0 * u - 5.0);
        w[axis][2] = 0.5 * u * (1.0 + 4.0 * u - 3.0 * u * u);
        w[axis][3] = 0.5 * u * u * (u - 1.0);
    }
    // Tensor sum over the 4^d neighborhood; out-of-range taps read zero.
    double acc = 0.0;
    const int corners = 1 << (2 * d);
    for (int c = 0; c < corners; ++c) {
        double weight = 1.0;
        std::ptrdiff_t off = 0;
        bool valid = true;
        int code = c;
        for (int axis = 0; axis < d; ++axis) {
            const int tap = code & 3;
            code >>= 2;
            weight *= w[axis][tap];
            const int idx = base[axis] + tap - 1;
            if (idx < 0 || idx >= spec_.npoints[axis]) {
                valid = false;
                break;
            }
            off += static_cast<std::ptrdiff_t>(stride[axis]) * idx;
        }
        if (valid && weight != 0.0) acc += weight * values_[off];
    }
    return acc;
}

double GridFunction::boundary_mass_fraction() const {
    const int d = spec_.dim();
    double boundary = 0.0, total = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double a = std::abs(values_[i]);
        total += a;
        auto idx = spec_.unflat(i);
        for (int axis = 0; axis < d; ++axis) {
            if (idx[axis] == 0 || idx[axis] == spec_.npoints[axis] - 1) {
                boundary += a;
                break;
            }
        }
    }
    return total > 0.0 ? boundary / total : 0.0;
}

GridFunction random_bumps(const GridSpec& spec, std::uint64_t seed, const BumpConfig& config) {
    std::mt19937_64 rng(seed);
    const int d = spec.dim();
    struct Bump {
        std::vector<double> center, width;
        double amp, phase;
    };
    std::vector<Bump> bumps(config.count);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), amp(0.4, 1.0), phase(0.0, 6.2831853);
    for (auto& b : bumps) {
        b.center.resize(d);
        b.width.resize(d);
        for (int axis = 0; axis < d; ++axis) {
            b.center[axis] = unit(rng) * config.center_fraction * spec.length[axis];
            const double min_w = config.min_width_cells * spec.spacing(axis);
            std::uniform_real_distribution<double> w(min_w, 2.5 * min_w);
            b.width[axis] = w(rng);
        }
        b.amp = amp(rng) * (unit(rng) >= 0 ? 1.0 : -1.0);
        b.phase = phase(rng);
    }
    return GridFunction::sample(spec, [&](const std::vector<double>& x) {
        double v = 0.0;
        for (const auto& b : bumps) {
            double e = 0.0;
            for (int axis = 0; axis < d; ++axis) {
                const double t = (x[axis] - b.center[axis]) / b.width[axis];
                e += 0.5 * t * t;
            }
            double val = b.amp * std::exp(-e);
            if (config.modulation_axis >= 0)
                val *= std::cos(config.modulation_omega * x[config.modulation_axis] + b.phase);
            v += val;
        }
        return v;
    });
}

GridFunction gaussian_profile(const GridSpec& spec, const std::vector<double>& sigma) {
    GridFunction g = GridFunction::sample(spec, [&](const std::vector<double>& x) {
        double e = 0.0;
        for (int axis = 0; axis < spec.dim(); ++axis) {
            const double t = x[axis] / sigma[axis];
            e += 0.5 * t * t;
        }
        return std::exp(-e);
    });
    const double mass = g.integral();
    if (mass > 0.0) g *= 1.0 / mass;
    return g;
}

ShellData shell_profile(const GradedLieAlgebra& algebra, const GridFunction& f, double r_min,
                        double r_max, int bins) {
    ShellData data;
    data.radius.assign(bins, 0.0);
    data.mean_abs.assign(bins, 0.0);
    data.count.assign(bins, 0);
    const double log_lo = std::log(r_min), log_hi = std::log(r_max);
    const auto& spec = f.spec();
    std::vector<double> sums(bins, 0.0);
    for (std::size_t i = 0; i < spec.total(); ++i) {
        const double r = homogeneous_norm(algebra, spec.point_flat(i));
        if (r < r_min || r > r_max) continue;
        int b = static_cast<int>((std::log(r) - log_lo) / (log_hi - log_lo) * bins);
        if (b < 0) b = 0;
        if (b >= bins) b = bins - 1;
        sums[b] += std::abs(f[i]);
        data.count[b] += 1;
    }
    for (int b = 0; b < bins; ++b) {
        data.radius[b] = std::exp(log_lo + (b + 0.5) / bins * (log_hi - log_lo));
        if (data.count[b] > 0) data.mean_abs[b] = sums[b] / data.count[b];
    }
    return data;
}

}  // namespace nilcalc
