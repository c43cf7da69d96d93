#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gclust/correlation.hpp"
#include "gclust/gaussian_bank.hpp"

namespace gclust {

// Cluster labels of the K Gaussian functions, 1-based. Label m's smallest
// member index is smaller than label m+1's (first-touch numbering).
struct LabelAssignment {
    std::vector<int> labels;   // size K, values in 1..cluster_count
    int cluster_count = 0;
    double tau = 0.0;
};

// The default correlation threshold, 1/9.
double default_tau();

// Flood-fills the connected components of the graph with an edge (k, l)
// wherever r(k, l) > tau (strict). Iterative, no recursion depth limit.
// Dead functions have zero off-diagonal correlation and become singletons.
// tau outside (0, 1] is rejected.
LabelAssignment assign_labels(const CorrelationMatrix& corr, double tau);

// Label of the nearest center by l2 distance; ties break to the smallest
// index. No distance cutoff: every point gets a label.
int label_point(const GaussianBank& bank, const LabelAssignment& assignment,
                const Eigen::VectorXd& x);

}  // namespace gclust
