#pragma once

#include <cstdint>
#include <vector>

namespace gclust {

struct EvalReport {
    int clusters_found = 0;
    int clusters_truth = 0;
    double ari = 0.0;
    int n_points = 0;
    std::int64_t skipped_samples = 0;
};

// Chance-corrected pair-counting agreement between two labelings of the same
// points: 1 for identical partitions (up to relabeling), ~0 for independent
// ones. Both sequences must have the same length, at least 2.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

// A run counts as successful when it found the right number of clusters and
// agreed with the ground truth at least min_ari.
bool success(const EvalReport& report, double min_ari = 0.9);

}  // namespace gclust
