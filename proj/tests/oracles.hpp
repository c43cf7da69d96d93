// Independent reference implementations used by the unit and acceptance
// suites. Deliberately written without touching the code paths they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

// Union-find grouping of indices whose pairwise value strictly exceeds tau,
// renumbered so labels appear in order of their smallest member.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

inline std::vector<int> threshold_components(const Eigen::MatrixXd& r, double tau) {
    const int k = static_cast<int>(r.rows());
    UnionFind uf(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (r(a, b) > tau) uf.unite(a, b);
    std::vector<int> labels(k, 0);
    std::map<int, int> order;
    for (int a = 0; a < k; ++a) {
        int root = uf.find(a);
        auto [it, fresh] = order.try_emplace(root, static_cast<int>(order.size()) + 1);
        labels[a] = it->second;
    }
    return labels;
}

// Adjusted Rand index from explicit pair enumeration.
inline double pair_counting_ari(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = a.size();
    std::int64_t both = 0, in_a = 0, in_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same_a = a[i] == a[j];
            bool same_b = b[i] == b[j];
            both += same_a && same_b;
            in_a += same_a;
            in_b += same_b;
        }
    }
    double total = static_cast<double>(n) * (n - 1) / 2.0;
    double expected = static_cast<double>(in_a) * static_cast<double>(in_b) / total;
    double max_index = 0.5 * (static_cast<double>(in_a) + static_cast<double>(in_b));
    double denom = max_index - expected;
    double num = static_cast<double>(both) - expected;
    if (denom == 0.0) return num == 0.0 ? 1.0 : 0.0;
    return num / denom;
}

// Squared p-norm denominator, recomputed from scratch.
inline double squared_norm(const Eigen::VectorXd& f, double p, bool is_inf, bool is_none) {
    if (is_none) return 1.0;
    if (is_inf) {
        double m = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i) m = std::max(m, f[i]);
        return m * m;
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) s += std::pow(f[i], p);
    return std::pow(std::pow(s, 1.0 / p), 2.0);
}

// Symmetric matrix with unit diagonal whose off-diagonal entries land above
// tau with probability edge_prob: exercises sparse and dense graphs alike.
inline Eigen::MatrixXd random_correlation(int k, double tau, double edge_prob,
                                          std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(k, k);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            double v = unit(rng) < edge_prob ? tau + (1.0 - tau) * unit(rng)
                                             : tau * unit(rng);
            r(a, b) = v;
            r(b, a) = v;
        }
    }
    return r;
}

}  // namespace oracles
