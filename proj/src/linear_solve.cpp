#include "nilcalc/linear_solve.hpp"

#include <stdexcept>

namespace nilcalc {

std::optional<RationalMatrix> solve_exact(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows != a.cols || a.rows != b.rows)
        throw std::invalid_argument("solve_exact: shape mismatch");
    const int n = a.rows;
    const int m = b.cols;

    // Work on the augmented integer matrix: each row scaled by the lcm of its
    // denominators, then Bareiss one-step fraction-free elimination.
    std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(n + m));
    for (int r = 0; r < n; ++r) {
        BigInt scale(1);
        for (int c = 0; c < n; ++c) scale = lcm(scale, denominator(a.at(r, c)));
        for (int c = 0; c < m; ++c) scale = lcm(scale, denominator(b.at(r, c)));
        for (int c = 0; c < n; ++c) {
            const Rational v = a.at(r, c) * Rational(scale);
            w[r][c] = numerator(v);
        }
        for (int c = 0; c < m; ++c) {
            const Rational v = b.at(r, c) * Rational(scale);
            w[r][n + c] = numerator(v);
        }
    }

    BigInt prev(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (w[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) std::swap(w[pivot], w[k]);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n + m; ++c) {
                BigInt t = w[r][c] * w[k][k] - w[r][k] * w[k][c];
                w[r][c] = t / prev;  // divides exactly (Bareiss)
            }
            w[r][k] = 0;
        }
        prev = w[k][k];
    }

    RationalMatrix x(n, m);
    for (int c = 0; c < m; ++c) {
        for (int r = n - 1; r >= 0; --r) {
            Rational acc(w[r][n + c]);
            for (int j = r + 1; j < n; ++j) acc -= Rational(w[r][j]) * x.at(j, c);
            if (w[r][r] == 0) return std::nullopt;
            x.at(r, c) = acc / Rational(w[r][r]);
        }
    }
    return x;
}

}  // namespace nilcalc
