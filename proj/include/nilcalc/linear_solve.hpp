#pragma once

#include "nilcalc/rational.hpp"

#include <optional>
#include <vector>

namespace nilcalc {

/// Dense rational matrix in row-major order.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), data(r * c, Rational(0)) {}
    Rational& at(int r, int c) { return data[r * cols + c]; }
    const Rational& at(int r, int c) const { return data[r * cols + c]; }
};

/// Solves A X = B exactly for square A via fraction-free (Bareiss)
/// elimination after clearing denominators.  Returns nullopt when A is
/// singular.
std::optional<RationalMatrix> solve_exact(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace nilcalc
