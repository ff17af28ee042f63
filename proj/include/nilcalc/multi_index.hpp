#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace nilcalc {

/// Multi-index alpha = (a_1,...,a_n) of nonnegative integers.  |alpha| is the
/// plain length, [alpha] the weighted (homogeneous) degree against a weight
/// vector.
using MultiIndex = std::vector<int>;

inline int order_of(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

/// Weighted degree [alpha] = sum_j weights[j] * alpha[j].
inline int weighted_degree(const MultiIndex& alpha, const std::vector<int>& weights) {
    int d = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) d += weights[j] * alpha[j];
    return d;
}

inline bool is_zero_index(const MultiIndex& alpha) {
    for (int a : alpha)
        if (a != 0) return false;
    return true;
}

inline MultiIndex zero_index(int dim) { return MultiIndex(dim, 0); }

inline MultiIndex unit_index(int dim, int j) {
    MultiIndex e(dim, 0);
    e[j] = 1;
    return e;
}

inline MultiIndex add_indices(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] + b[j];
    return c;
}

std::string index_to_string(const MultiIndex& alpha);

/// All multi-indices with weighted degree exactly d, ordered lexicographically.
std::vector<MultiIndex> indices_of_degree(const std::vector<int>& weights, int d);

/// All multi-indices with weighted degree <= d, graded by [alpha] then lex.
std::vector<MultiIndex> indices_up_to_degree(const std::vector<int>& weights, int d);

/// Expands a multi-index into the generator word (1^{a_1} 2^{a_2} ... n^{a_n}),
/// 0-based generator indices.
std::vector<int> index_to_word(const MultiIndex& alpha);

}  // namespace nilcalc
