#include "nilcalc/schrodinger.hpp"

#include "nilcalc/fd_ops.hpp"
#include "nilcalc/hermite.hpp"
#include "nilcalc/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nilcalc {

namespace {

using Complex = std::complex<double>;

// f^lambda(i1,i2) = sum_{i3} f e^{-i lambda x3} h3 on the transverse plane.
std::vector<Complex> central_transform(const GridFunction& f, double lambda) {
    const GridSpec& spec = f.spec();
    const int n1 = spec.npoints[0], n2 = spec.npoints[1], n3 = spec.npoints[2];
    const double h3 = spec.spacing(2);
    std::vector<Complex> out(static_cast<std::size_t>(n1) * n2, Complex(0.0));
    std::vector<Complex> tw(n3);
    for (int i3 = 0; i3 < n3; ++i3) tw[i3] = std::polar(h3, -lambda * spec.coord(2, i3));
    for (int i1 = 0; i1 < n1; ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
            Complex acc = 0.0;
            const std::size_t base = (static_cast<std::size_t>(i1) * n2 + i2) * n3;
            for (int i3 = 0; i3 < n3; ++i3) acc += f[base + i3] * tw[i3];
            out[static_cast<std::size_t>(i1) * n2 + i2] = acc;
        }
    }
    return out;
}

// F(p, q) = sum_{x2} f^lambda(p, x2) e^{-i lambda x2 q} h2, with p read off
// the x1 axis by linear interpolation (zero outside).
struct PartialTransform {
    const GridSpec* spec;
    double lambda;
    std::vector<Complex> f_lambda;

    Complex eval(double p, double q) const {
        const int n1 = spec->npoints[0], n2 = spec->npoints[1];
        const double h1 = spec->spacing(0);
        const double t = (p + spec->length[0]) / h1;
        if (t < 0.0 || t > n1 - 1) return 0.0;
        int i = static_cast<int>(t);
        if (i >= n1 - 1) i = n1 - 2;
        const double w = t - i;
        Complex acc = 0.0;
        const double h2 = spec->spacing(1);
        for (int i2 = 0; i2 < n2; ++i2) {
            const Complex row = (1.0 - w) * f_lambda[static_cast<std::size_t>(i) * n2 + i2] +
                                w * f_lambda[static_cast<std::size_t>(i + 1) * n2 + i2];
            acc += row * std::polar(h2, -lambda * spec->coord(1, i2) * q);
        }
        return acc;
    }
};

}  // namespace

RepMatrix RepMatrix::multiply(const RepMatrix& other) const {
    RepMatrix out;
    out.lambda = lambda;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            const Complex a = at(j, l);
            if (a == Complex(0.0)) continue;
            for (int k = 0; k < n; ++k) out.at(j, k) += a * other.at(l, k);
        }
    return out;
}

RepMatrix RepMatrix::adjoint() const {
    RepMatrix out;
    out.lambda = lambda;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out.at(j, k) = std::conj(at(k, j));
    return out;
}

double RepMatrix::block_distance(const RepMatrix& other, int block) const {
    double worst = 0.0;
    for (int j = 0; j < block; ++j)
        for (int k = 0; k < block; ++k) worst = std::max(worst, std::abs(at(j, k) - other.at(j, k)));
    return worst;
}

double RepMatrix::unitarity_defect(int block) const {
    RepMatrix p = adjoint().multiply(*this);
    double worst = 0.0;
    for (int j = 0; j < block; ++j)
        for (int k = 0; k < block; ++k) {
            const Complex expect = j == k ? Complex(1.0) : Complex(0.0);
            worst = std::max(worst, std::abs(p.at(j, k) - expect));
        }
    return worst;
}

double RepMatrix::hs_norm_block(int block) const {
    double s = 0.0;
    for (int j = 0; j < block; ++j)
        for (int k = 0; k < block; ++k) s += std::norm(at(j, k));
    return std::sqrt(s);
}

RepMatrix schrodinger_rep(double lambda, const std::vector<double>& x, int n,
                          double quadrature_du) {
    if (lambda == 0.0) throw std::domain_error("schrodinger_rep: lambda must be nonzero");
    const double root = std::sqrt(std::abs(lambda));
    RepMatrix rep;
    rep.lambda = lambda;
    rep.n = n;
    rep.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));

    const double extent = std::sqrt(2.0 * n + 1.0) / root + std::abs(x[0]) + 2.0;
    const int m = static_cast<int>(2.0 * extent / quadrature_du) + 1;
    const double du = 2.0 * extent / (m - 1);

    for (int iu = 0; iu < m; ++iu) {
        const double u = -extent + iu * du;
        const auto left = hermite_values(n, root * u);
        const auto right = hermite_values(n, root * (u + x[0]));
        const Complex phase =
            std::polar(root * du, lambda * (x[2] + x[1] * u + 0.5 * x[0] * x[1]));
        for (int j = 0; j < n; ++j) {
            if (left[j] == 0.0) continue;
            const Complex lj = left[j] * phase;
            for (int k = 0; k < n; ++k) rep.entries[static_cast<std::size_t>(j) * n + k] += lj * right[k];
        }
    }
    return rep;
}

RepMatrix group_fourier_h1(const GridFunction& f, double lambda, int n) {
    const GridSpec& spec = f.spec();
    if (spec.dim() != 3) throw std::invalid_argument("group_fourier_h1: need a 3-d grid");
    const double root = std::sqrt(std::abs(lambda));
    PartialTransform F{&spec, lambda, central_transform(f, lambda)};

    // Kernel K(u,v) = F(u-v, (u+v)/2) sampled finely enough for the Hermite
    // oscillation and the modulation in (u+v)/2.
    const double psi_freq = root * std::sqrt(2.0 * n + 1.0);
    const double mod_freq = 4.0 + 0.5 * std::abs(lambda) * spec.length[1];
    const double du = std::min(0.16, (2.0 * std::numbers::pi / std::max(psi_freq, mod_freq)) / 7.0);
    const double extent =
        std::max(std::sqrt(2.0 * n + 1.0) / root + 2.0, spec.length[0] + 8.0 / std::abs(lambda));
    const int m = static_cast<int>(2.0 * extent / du) + 1;

    // Banded support: |u - v| <= x1 extent of f.
    const double p_max = spec.length[0] + du;
    const int band = static_cast<int>(p_max / du) + 1;

    std::vector<Complex> kernel(static_cast<std::size_t>(m) * (2 * band + 1), Complex(0.0));
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t iu = lo; iu < hi; ++iu) {
            const double u = -extent + iu * du;
            for (int bo = -band; bo <= band; ++bo) {
                const std::ptrdiff_t iv = static_cast<std::ptrdiff_t>(iu) + bo;
                if (iv < 0 || iv >= m) continue;
                const double v = -extent + iv * du;
                kernel[iu * (2 * band + 1) + (bo + band)] = F.eval(u - v, 0.5 * (u + v));
            }
        }
    });

    // Hermite projection: out_{jk} = Int psi_j(u) K(u,v) psi_k(v) du dv.
    std::vector<std::vector<double>> psi(m);
    for (int iu = 0; iu < m; ++iu) {
        const double u = -extent + iu * du;
        psi[iu] = hermite_values(n, root * u);
        for (auto& t : psi[iu]) t *= std::sqrt(root);
    }
    // A(j, v) = sum_u psi_j(u) K(u, v) du over the band.
    std::vector<Complex> a(static_cast<std::size_t>(n) * m, Complex(0.0));
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t iv = lo; iv < hi; ++iv) {
            for (int bo = -band; bo <= band; ++bo) {
                const std::ptrdiff_t iu = static_cast<std::ptrdiff_t>(iv) + bo;
                if (iu < 0 || iu >= m) continue;
                const Complex kval = kernel[static_cast<std::size_t>(iu) * (2 * band + 1) +
                                            (-bo + band)];
                if (kval == Complex(0.0)) continue;
                const auto& pj = psi[iu];
                for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j) * m + iv] += pj[j] * kval * du;
            }
        }
    });
    RepMatrix out;
    out.lambda = lambda;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int j = 0; j < n; ++j) {
        for (int iv = 0; iv < m; ++iv) {
            const Complex av = a[static_cast<std::size_t>(j) * m + iv] * du;
            if (av == Complex(0.0)) continue;
            const auto& pk = psi[iv];
            for (int k = 0; k < n; ++k) out.at(j, k) += av * pk[k];
        }
    }
    return out;
}

double fourier_hs_norm_sq(const GridFunction& f, double lambda) {
    const GridSpec& spec = f.spec();
    PartialTransform F{&spec, lambda, central_transform(f, lambda)};
    // ||K||_F^2 = Int |F(p,q)|^2 dp dq (unit Jacobian change of variables).
    const int n1 = spec.npoints[0];
    const double h1 = spec.spacing(0);
    const double q_extent = spec.length[1] / 2.0 + 10.0 / std::abs(lambda);
    const double dq = std::min(0.25, (2.0 * std::numbers::pi / (std::abs(lambda) * spec.length[1])) / 8.0);
    const int mq = static_cast<int>(2.0 * q_extent / dq) + 1;

    double total = 0.0;
    for (int ip = 0; ip < 2 * n1 - 1; ++ip) {
        const double p = (ip - (n1 - 1)) * h1;
        double row = 0.0;
        for (int iq = 0; iq < mq; ++iq) {
            const double q = -q_extent + iq * dq;
            const double w = (iq == 0 || iq == mq - 1) ? 0.5 : 1.0;
            row += w * std::norm(F.eval(p, q));
        }
        total += row * dq * h1;
    }
    return total;
}

RepMatrix rep_derived_x1(double lambda, int n) {
    const double root = std::sqrt(std::abs(lambda));
    RepMatrix out;
    out.lambda = lambda;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int k = 0; k < n; ++k) {
        if (k > 0) out.at(k - 1, k) = root * hermite_ladder_lo(k);
        if (k + 1 < n) out.at(k + 1, k) = -root * hermite_ladder_hi(k);
    }
    return out;
}

RepMatrix rep_derived_x2(double lambda, int n) {
    const double root = std::sqrt(std::abs(lambda));
    const double sign = lambda >= 0 ? 1.0 : -1.0;
    RepMatrix out;
    out.lambda = lambda;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int k = 0; k < n; ++k) {
        const Complex c(0.0, sign * root);
        if (k > 0) out.at(k - 1, k) = c * hermite_ladder_lo(k);
        if (k + 1 < n) out.at(k + 1, k) = c * hermite_ladder_hi(k);
    }
    return out;
}

RepMatrix rep_derived_x3(double lambda, int n) {
    RepMatrix out;
    out.lambda = lambda;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int k = 0; k < n; ++k) out.at(k, k) = Complex(0.0, lambda);
    return out;
}

PlancherelReport plancherel_check_h1(const std::vector<GridFunction>& references,
                                     const std::vector<GridFunction>& tests,
                                     const PlancherelConfig& config) {
    if (references.size() < 2)
        throw std::invalid_argument("plancherel: need two reference functions for calibration");
    const int nl = config.lambda_samples;
    const double dl = (config.lambda_max - config.lambda_min) / (nl - 1);

    auto dual_energy = [&](const GridFunction& f) {
        std::vector<double> density(nl, 0.0);
        parallel_for(static_cast<std::size_t>(nl), [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const double lambda = config.lambda_min + i * dl;
                density[i] = fourier_hs_norm_sq(f, lambda) * lambda;
            }
        });
        double acc = 0.0;
        for (int i = 0; i < nl; ++i) acc += ((i == 0 || i == nl - 1) ? 0.5 : 1.0) * density[i];
        return 2.0 * acc * dl;  // real f: double the positive-lambda half
    };

    PlancherelReport report;
    const double c1 =
        references[0].l2_norm() * references[0].l2_norm() / dual_energy(references[0]);
    const double c2 =
        references[1].l2_norm() * references[1].l2_norm() / dual_energy(references[1]);
    report.constant = c1;
    report.calibration_drift = std::abs(c2 - c1) / c1;
    if (report.calibration_drift > 0.01)
        throw std::runtime_error("plancherel: calibration drift " +
                                 std::to_string(report.calibration_drift) +
                                 " across references (convention bug)");
    for (const auto& f : tests) {
        const double lhs = f.l2_norm() * f.l2_norm();
        const double rhs = report.constant * dual_energy(f);
        const double err = std::abs(lhs - rhs) / std::max(lhs, 1e-300);
        report.relative_errors.push_back(err);
        report.max_relative_error = std::max(report.max_relative_error, err);
    }
    return report;
}

IntertwiningReport intertwining_check_h1(const GroupLawTable& law, const GridFunction& f,
                                         double lambda, int n) {
    IntertwiningReport report;
    report.lambda = lambda;
    RepMatrix fh = group_fourier_h1(f, lambda, n);
    const int block = n / 2;
    const double scale = std::max(fh.hs_norm_block(block), 1e-300);

    const RepMatrix derived[3] = {rep_derived_x1(lambda, n), rep_derived_x2(lambda, n),
                                  rep_derived_x3(lambda, n)};
    for (int j = 0; j < 3; ++j) {
        FdOperator xj(law, InvariantOperator::generator(3, j), f.spec());
        RepMatrix lhs = group_fourier_h1(xj.apply(f), lambda, n);
        RepMatrix rhs = derived[j].multiply(fh);
        double err = 0.0;
        for (int r = 0; r < block; ++r)
            for (int c = 0; c < block; ++c) err += std::norm(lhs.at(r, c) - rhs.at(r, c));
        report.relative_error = std::max(report.relative_error, std::sqrt(err) / scale);
    }
    return report;
}

}  // namespace nilcalc
