#include "nilcalc/algebra.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace nilcalc {

GradedLieAlgebra::GradedLieAlgebra(std::string name, std::vector<int> weights,
                                   std::vector<BracketTerm> brackets)
    : name_(std::move(name)), weights_(std::move(weights)), raw_brackets_(std::move(brackets)) {
    const int n = dim();
    if (n <= 0) throw std::invalid_argument("algebra dimension must be positive");
    for (int w : weights_)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (const auto& b : raw_brackets_) {
        if (b.i < 0 || b.i >= n || b.j < 0 || b.j >= n || b.k < 0 || b.k >= n)
            throw std::invalid_argument("bracket index out of range in '" + name_ + "'");
    }
    homogeneous_dimension_ = std::accumulate(weights_.begin(), weights_.end(), 0);
    nu_o_ = 1;
    for (int w : weights_) nu_o_ = std::lcm(nu_o_, w);
    max_weight_ = *std::max_element(weights_.begin(), weights_.end());

    table_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
    auto add = [&](int i, int j, int k, const Rational& c) {
        auto& row = table_[i][j];
        for (auto& [kk, cc] : row) {
            if (kk == k) {
                cc += c;
                return;
            }
        }
        if (!is_zero(c)) row.emplace_back(k, c);
    };
    for (const auto& b : raw_brackets_) {
        add(b.i, b.j, b.k, b.c);
        add(b.j, b.i, b.k, -b.c);
    }
    for (auto& row : table_)
        for (auto& cell : row)
            cell.erase(std::remove_if(cell.begin(), cell.end(),
                                      [](const auto& p) { return is_zero(p.second); }),
                       cell.end());
}

const std::vector<std::pair<int, Rational>>& GradedLieAlgebra::bracket(int i, int j) const {
    return table_[i][j];
}

std::vector<Rational> GradedLieAlgebra::bracket_vectors(const std::vector<Rational>& a,
                                                        const std::vector<Rational>& b) const {
    const int n = dim();
    std::vector<Rational> out(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(b[j])) continue;
            for (const auto& [k, c] : table_[i][j]) out[k] += a[i] * b[j] * c;
        }
    }
    return out;
}

ValidationReport GradedLieAlgebra::validate() const {
    ValidationReport report;
    const int n = dim();
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back({std::move(msg)});
    };

    // Antisymmetry and weight compatibility on the assembled table.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, c] : table_[i][j]) {
                Rational mirror(0);
                for (const auto& [kk, cc] : table_[j][i])
                    if (kk == k) mirror = cc;
                if (mirror != -c)
                    fail("antisymmetry fails for (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")->" + std::to_string(k + 1));
                if (weights_[k] != weights_[i] + weights_[j])
                    fail("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")->" +
                         std::to_string(k + 1) + ": weight " + std::to_string(weights_[k]) +
                         " != " + std::to_string(weights_[i] + weights_[j]));
            }
        }
    }

    // Jacobi identity on basis triples.
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> ei(n, Rational(0));
        ei[i] = 1;
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> ej(n, Rational(0));
            ej[j] = 1;
            for (int k = j + 1; k < n; ++k) {
                std::vector<Rational> ek(n, Rational(0));
                ek[k] = 1;
                auto t1 = bracket_vectors(ei, bracket_vectors(ej, ek));
                auto t2 = bracket_vectors(ej, bracket_vectors(ek, ei));
                auto t3 = bracket_vectors(ek, bracket_vectors(ei, ej));
                for (int m = 0; m < n; ++m) {
                    if (!is_zero(t1[m] + t2[m] + t3[m])) {
                        fail("Jacobi fails on triple (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                        break;
                    }
                }
            }
        }
    }
    return report;
}

RationalPoint dilate(const GradedLieAlgebra& algebra, const Rational& r, const RationalPoint& x) {
    RationalPoint y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        y[j] = rational_pow(r, static_cast<unsigned>(algebra.weights()[j])) * x[j];
    return y;
}

std::vector<double> dilate(const GradedLieAlgebra& algebra, double r, const std::vector<double>& x) {
    if (r <= 0.0) throw std::domain_error("dilation parameter must be positive");
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        y[j] = std::pow(r, algebra.weights()[j]) * x[j];
    return y;
}

double homogeneous_norm(const GradedLieAlgebra& algebra, const std::vector<double>& x) {
    const int nu = algebra.nu_o();
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const int e = 2 * nu / algebra.weights()[j];
        s += std::pow(std::abs(x[j]), e);
    }
    return std::pow(s, 1.0 / (2.0 * nu));
}

namespace {

GradedLieAlgebra make_abelian(int n) {
    return GradedLieAlgebra("abelian:" + std::to_string(n), std::vector<int>(n, 1), {});
}

GradedLieAlgebra make_heisenberg(int n) {
    // Dimension 2n+1, weights (1,...,1,2), [X_i, X_{n+i}] = X_{2n+1}.
    std::vector<int> weights(2 * n + 1, 1);
    weights[2 * n] = 2;
    std::vector<BracketTerm> brackets;
    for (int i = 0; i < n; ++i) brackets.push_back({i, n + i, 2 * n, Rational(1)});
    return GradedLieAlgebra("heisenberg:" + std::to_string(n), weights, brackets);
}

GradedLieAlgebra make_engel() {
    // Weights (1,1,2,3), [X1,X2]=X3, [X1,X3]=X4.
    std::vector<BracketTerm> brackets{{0, 1, 2, Rational(1)}, {0, 2, 3, Rational(1)}};
    return GradedLieAlgebra("engel", {1, 1, 2, 3}, brackets);
}

}  // namespace

bool is_catalog_name(const std::string& reference) {
    if (reference == "engel") return true;
    return reference.rfind("abelian:", 0) == 0 || reference.rfind("heisenberg:", 0) == 0;
}

GradedLieAlgebra catalog_group(const std::string& reference) {
    if (reference == "engel") return make_engel();
    auto suffix_int = [&](const std::string& prefix) {
        const std::string tail = reference.substr(prefix.size());
        std::size_t pos = 0;
        int n = std::stoi(tail, &pos);
        if (pos != tail.size() || n <= 0)
            throw std::invalid_argument("bad group parameter in '" + reference + "'");
        return n;
    };
    if (reference.rfind("abelian:", 0) == 0) return make_abelian(suffix_int("abelian:"));
    if (reference.rfind("heisenberg:", 0) == 0) return make_heisenberg(suffix_int("heisenberg:"));
    return load_group_file(reference);
}

GradedLieAlgebra load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group spec file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("group spec '" + path + "': " + e.what());
    }
    if (!j.contains("dim") || !j.contains("weights"))
        throw std::invalid_argument("group spec '" + path + "' needs 'dim' and 'weights'");
    const int n = j["dim"].get<int>();
    std::vector<int> weights = j["weights"].get<std::vector<int>>();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("group spec '" + path + "': weights length != dim");
    std::vector<BracketTerm> brackets;
    if (j.contains("brackets")) {
        for (const auto& b : j["brackets"]) {
            BracketTerm t;
            t.i = b.at("i").get<int>() - 1;
            t.j = b.at("j").get<int>() - 1;
            t.k = b.at("k").get<int>() - 1;
            t.c = parse_rational(b.at("c").is_string() ? b.at("c").get<std::string>()
                                                       : std::to_string(b.at("c").get<long long>()));
            brackets.push_back(t);
        }
    }
    std::string name = j.value("name", path);
    return GradedLieAlgebra(name, weights, brackets);
}

}  // namespace nilcalc
