#include "nilcalc/convolution.hpp"

#include "nilcalc/parallel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace nilcalc {

namespace {

using Complex = std::complex<double>;

bool is_abelian(const GradedLieAlgebra& g) {
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            if (!g.bracket(i, j).empty()) return false;
    return true;
}

bool is_standard_h1(const GradedLieAlgebra& g) {
    if (g.dim() != 3 || g.weights() != std::vector<int>{1, 1, 2}) return false;
    const auto& b = g.bracket(0, 1);
    return b.size() == 1 && b[0].first == 2 && b[0].second == Rational(1) &&
           g.bracket(0, 2).empty() && g.bracket(1, 2).empty();
}

// Direct sum: out(x) = sum_y f1(y) f2(bch(-y, x)) vol.
GridFunction convolve_direct_impl(const GroupLawTable& law, const GridFunction& f1,
                                  const GridFunction& f2) {
    const GridSpec& spec = f1.spec();
    GridFunction out(spec);
    const double vol = spec.cell_volume();
    const std::size_t n = spec.total();
    const int d = spec.dim();
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> x(d), y(d), z(d);
        for (std::size_t ix = lo; ix < hi; ++ix) {
            x = spec.point_flat(ix);
            double acc = 0.0;
            for (std::size_t iy = 0; iy < n; ++iy) {
                const double fy = f1[iy];
                if (fy == 0.0) continue;
                y = spec.point_flat(iy);
                for (int a = 0; a < d; ++a) y[a] = -y[a];
                z = law.product(y, x);
                acc += fy * f2.interpolate_cubic(z);
            }
            out[ix] = acc * vol;
        }
    });
    return out;
}

// Abelian linear convolution through zero-padded separable transforms.
GridFunction convolve_abelian(const GridFunction& f1, const GridFunction& f2) {
    const GridSpec& spec = f1.spec();
    const int d = spec.dim();
    // Padded sizes cover the full linear support.
    std::vector<int> m(d);
    std::size_t mtotal = 1;
    for (int a = 0; a < d; ++a) {
        m[a] = 2 * spec.npoints[a];
        mtotal *= static_cast<std::size_t>(m[a]);
    }
    auto flat_m = [&](const std::vector<int>& idx) {
        std::size_t f = 0;
        for (int a = 0; a < d; ++a) f = f * m[a] + idx[a];
        return f;
    };
    std::vector<Complex> A(mtotal, 0.0), B(mtotal, 0.0);
    for (std::size_t i = 0; i < spec.total(); ++i) {
        auto idx = spec.unflat(i);
        A[flat_m(idx)] = f1[i];
        B[flat_m(idx)] = f2[i];
    }

    // Direct transform along one axis (sizes stay desk-scale).
    auto axis_dft = [&](std::vector<Complex>& data, int axis, bool inverse) {
        const int len = m[axis];
        std::size_t stride = 1;
        for (int a = axis + 1; a < d; ++a) stride *= m[a];
        const std::size_t lines = mtotal / len;
        std::vector<Complex> twiddle(static_cast<std::size_t>(len) * len);
        const double sign = inverse ? 1.0 : -1.0;
        for (int k = 0; k < len; ++k)
            for (int j = 0; j < len; ++j)
                twiddle[static_cast<std::size_t>(k) * len + j] =
                    std::polar(1.0, sign * 2.0 * std::numbers::pi * k * j / len);
        parallel_for(lines, [&](std::size_t lo, std::size_t hi) {
            std::vector<Complex> buf(len);
            for (std::size_t line = lo; line < hi; ++line) {
                // Base offset of this line.
                const std::size_t block = line / stride;
                const std::size_t rem = line % stride;
                const std::size_t base = block * stride * len + rem;
                for (int k = 0; k < len; ++k) {
                    Complex acc = 0.0;
                    const Complex* tw = &twiddle[static_cast<std::size_t>(k) * len];
                    for (int j = 0; j < len; ++j) acc += data[base + j * stride] * tw[j];
                    buf[k] = inverse ? acc / static_cast<double>(len) : acc;
                }
                for (int k = 0; k < len; ++k) data[base + k * stride] = buf[k];
            }
        });
    };

    for (int a = 0; a < d; ++a) {
        axis_dft(A, a, false);
        axis_dft(B, a, false);
    }
    for (std::size_t i = 0; i < mtotal; ++i) A[i] *= B[i];
    for (int a = 0; a < d; ++a) axis_dft(A, a, true);

    // Read back: (f1*f2)(x) lives at index offset x = y + z - origin; with
    // node i representing -L + i h, the sum of coordinates maps to padded
    // index i1 + i2, and the origin sits at index (N-1)/2 per axis
    // (odd point counts keep the lattice aligned).
    GridFunction out(spec);
    const double vol = spec.cell_volume();
    std::vector<int> idx(d);
    for (std::size_t i = 0; i < spec.total(); ++i) {
        auto xi = spec.unflat(i);
        bool ok = true;
        for (int a = 0; a < d; ++a) {
            idx[a] = xi[a] + (spec.npoints[a] - 1) / 2;
            if ((spec.npoints[a] - 1) % 2 != 0) ok = false;
        }
        if (!ok) throw std::invalid_argument("abelian convolution needs odd point counts");
        out[i] = A[flat_m(idx)].real() * vol;
    }
    return out;
}

// heisenberg:1 with law (x*y)_3 = x3 + y3 + (x1 y2 - x2 y1)/2:
// transform the central variable, then for each frequency do the planar
// twisted convolution
//   (f*g)^l(x') = sum_{y'} f^l(y') g^l(x'-y') exp(-i l (y1 x2 - y2 x1)/2).
GridFunction convolve_h1(const GridFunction& f1, const GridFunction& f2) {
    const GridSpec& spec = f1.spec();
    const int n1 = spec.npoints[0], n2 = spec.npoints[1], n3 = spec.npoints[2];
    if ((n1 - 1) % 2 || (n2 - 1) % 2)
        throw std::invalid_argument("twisted convolution needs odd transverse point counts");
    const double h3 = spec.spacing(2);
    const double period = n3 * h3;
    const std::size_t plane = static_cast<std::size_t>(n1) * n2;

    // Central-axis DFT: F(m; i1, i2) = sum_{i3} f(i1,i2,i3) e^{-i l_m x3} h3.
    std::vector<Complex> F(static_cast<std::size_t>(n3) * plane), G(F.size()), OUT(F.size());
    std::vector<Complex> tw(static_cast<std::size_t>(n3) * n3);
    for (int mm = 0; mm < n3; ++mm) {
        const double lambda = 2.0 * std::numbers::pi * (mm - n3 / 2) / period;
        for (int i3 = 0; i3 < n3; ++i3)
            tw[static_cast<std::size_t>(mm) * n3 + i3] =
                std::polar(h3, -lambda * spec.coord(2, i3));
    }
    parallel_for(plane, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            const std::size_t i1 = p / n2, i2 = p % n2;
            for (int mm = 0; mm < n3; ++mm) {
                Complex a = 0.0, b = 0.0;
                for (int i3 = 0; i3 < n3; ++i3) {
                    const std::size_t src = (i1 * n2 + i2) * n3 + i3;
                    const Complex w = tw[static_cast<std::size_t>(mm) * n3 + i3];
                    a += f1[src] * w;
                    b += f2[src] * w;
                }
                F[static_cast<std::size_t>(mm) * plane + p] = a;
                G[static_cast<std::size_t>(mm) * plane + p] = b;
            }
        }
    });

    // Twisted planar convolution per frequency slice.
    parallel_for(static_cast<std::size_t>(n3), [&](std::size_t mlo, std::size_t mhi) {
        std::vector<Complex> phase1(static_cast<std::size_t>(n1) * n2);
        std::vector<Complex> phase2(static_cast<std::size_t>(n2) * n1);
        for (std::size_t mm = mlo; mm < mhi; ++mm) {
            const double lambda = 2.0 * std::numbers::pi * (static_cast<int>(mm) - n3 / 2) / period;
            const Complex* Fm = &F[mm * plane];
            const Complex* Gm = &G[mm * plane];
            Complex* Om = &OUT[mm * plane];
            // phase1[j1][i2] = exp(-i l y1(j1) x2(i2) / 2),
            // phase2[j2][i1] = exp(+i l y2(j2) x1(i1) / 2).
            for (int j1 = 0; j1 < n1; ++j1)
                for (int i2 = 0; i2 < n2; ++i2)
                    phase1[static_cast<std::size_t>(j1) * n2 + i2] =
                        std::polar(1.0, -0.5 * lambda * spec.coord(0, j1) * spec.coord(1, i2));
            for (int j2 = 0; j2 < n2; ++j2)
                for (int i1 = 0; i1 < n1; ++i1)
                    phase2[static_cast<std::size_t>(j2) * n1 + i1] =
                        std::polar(1.0, 0.5 * lambda * spec.coord(1, j2) * spec.coord(0, i1));
            for (int i1 = 0; i1 < n1; ++i1) {
                for (int i2 = 0; i2 < n2; ++i2) {
                    Complex acc = 0.0;
                    for (int j1 = 0; j1 < n1; ++j1) {
                        const int k1 = i1 - j1 + (n1 - 1) / 2;
                        if (k1 < 0 || k1 >= n1) continue;
                        const Complex p1 = phase1[static_cast<std::size_t>(j1) * n2 + i2];
                        for (int j2 = 0; j2 < n2; ++j2) {
                            const int k2 = i2 - j2 + (n2 - 1) / 2;
                            if (k2 < 0 || k2 >= n2) continue;
                            acc += Fm[static_cast<std::size_t>(j1) * n2 + j2] *
                                   Gm[static_cast<std::size_t>(k1) * n2 + k2] * p1 *
                                   phase2[static_cast<std::size_t>(j2) * n1 + i1];
                        }
                    }
                    Om[static_cast<std::size_t>(i1) * n2 + i2] =
                        acc * (spec.spacing(0) * spec.spacing(1));
                }
            }
        }
    });

    // Inverse transform in the central axis.
    GridFunction out(spec);
    parallel_for(plane, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            const std::size_t i1 = p / n2, i2 = p % n2;
            for (int i3 = 0; i3 < n3; ++i3) {
                Complex acc = 0.0;
                for (int mm = 0; mm < n3; ++mm)
                    acc += OUT[static_cast<std::size_t>(mm) * plane + p] *
                           std::conj(tw[static_cast<std::size_t>(mm) * n3 + i3]);
                out[(i1 * n2 + i2) * n3 + i3] = acc.real() / (h3 * period);
            }
        }
    });
    return out;
}

}  // namespace

ConvolutionResult group_convolve(const GroupLawTable& law, const GridFunction& f1,
                                 const GridFunction& f2) {
    if (!(f1.spec() == f2.spec()))
        throw std::invalid_argument("group_convolve: grids differ");
    ConvolutionResult result;
    result.boundary_mass_fraction =
        std::max(f1.boundary_mass_fraction(), f2.boundary_mass_fraction());
    result.boundary_warning = result.boundary_mass_fraction > 1e-3;

    const auto& g = law.algebra();
    if (is_abelian(g)) {
        result.value = convolve_abelian(f1, f2);
    } else if (is_standard_h1(g)) {
        result.value = convolve_h1(f1, f2);
    } else {
        if (f1.spec().total() > 20000)
            throw std::invalid_argument(
                "direct group convolution on " + g.name() +
                " is quadratic in the node count; use a smaller grid");
        result.value = convolve_direct_impl(law, f1, f2);
    }
    return result;
}

GridFunction group_convolve_direct(const GroupLawTable& law, const GridFunction& f1,
                                   const GridFunction& f2) {
    if (!(f1.spec() == f2.spec()))
        throw std::invalid_argument("group_convolve_direct: grids differ");
    return convolve_direct_impl(law, f1, f2);
}

SeparableKernel SeparableKernel::invariant(GridFunction kappa) {
    SeparableKernel k;
    GridFunction ones(kappa.spec());
    for (auto& v : ones.values()) v = 1.0;
    k.terms.emplace_back(std::move(ones), std::move(kappa));
    return k;
}

GridFunction quantize_kernel(const GroupLawTable& law, const SeparableKernel& kernel,
                             const GridFunction& f) {
    if (kernel.terms.empty()) throw std::invalid_argument("quantize_kernel: empty kernel");
    GridFunction out(f.spec());
    for (const auto& [coeff, kappa] : kernel.terms) {
        GridFunction conv = group_convolve(law, f, kappa).value;
        bool unit = true;
        for (double v : coeff.values()) {
            if (v != 1.0) {
                unit = false;
                break;
            }
        }
        if (unit) {
            out += conv;
        } else {
            out += conv.multiplied(coeff);
        }
    }
    return out;
}

}  // namespace nilcalc
