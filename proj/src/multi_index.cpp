#include "nilcalc/multi_index.hpp"

namespace nilcalc {

std::string index_to_string(const MultiIndex& alpha) {
    std::string out = "(";
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(alpha[j]);
    }
    out += ")";
    return out;
}

namespace {

void enumerate_rec(const std::vector<int>& weights, int pos, int remaining, MultiIndex& cur,
                   std::vector<MultiIndex>& out) {
    if (pos == static_cast<int>(weights.size())) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const int w = weights[pos];
    for (int a = 0; a * w <= remaining; ++a) {
        cur[pos] = a;
        enumerate_rec(weights, pos + 1, remaining - a * w, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(const std::vector<int>& weights, int d) {
    std::vector<MultiIndex> out;
    if (d < 0) return out;
    MultiIndex cur(weights.size(), 0);
    enumerate_rec(weights, 0, d, cur, out);
    return out;
}

std::vector<MultiIndex> indices_up_to_degree(const std::vector<int>& weights, int d) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= d; ++k) {
        auto slice = indices_of_degree(weights, k);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

std::vector<int> index_to_word(const MultiIndex& alpha) {
    std::vector<int> word;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        for (int k = 0; k < alpha[j]; ++k) word.push_back(static_cast<int>(j));
    return word;
}

}  // namespace nilcalc
