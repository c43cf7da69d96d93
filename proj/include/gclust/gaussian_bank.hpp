#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "gclust/correlation.hpp"

namespace gclust {

// All scalar knobs of a run.
struct HyperParams {
    int k = 20;                 // number of Gaussian functions
    int dim = 2;                // input dimensionality
    double sigma = 0.1;         // shared width (squared-distance units)
    double eta = 0.02;          // learning rate
    double lambda = 0.5;        // repulsion strength
    NormMode norm_mode = NormMode::infinity();
    double tau = 1.0 / 9.0;     // correlation threshold, see labeling::default_tau
    std::int64_t steps = 100000;
    std::uint64_t seed = 1;

    void validate() const;  // throws std::invalid_argument
};

// A bank of K Gaussian functions over R^D with shared width:
// the i-th function maps x to exp(-|x - mu_i|^2 / sigma).
struct GaussianBank {
    Eigen::MatrixXd centers;  // K x D, row i is mu_i
    double sigma = 1.0;

    int k() const { return static_cast<int>(centers.rows()); }
    int dim() const { return static_cast<int>(centers.cols()); }
};

// Every center coordinate drawn independently and uniformly from [-1/2, 1/2).
GaussianBank init_bank(const HyperParams& params, std::mt19937_64& rng);

// Output of all K functions at x, each in (0, 1] (underflow to 0 possible).
Eigen::VectorXd activate(const GaussianBank& bank, const Eigen::VectorXd& x);

// exp(-|mu_j - mu_i|^2 / sigma); symmetric in (i, j).
double repulsion_kernel(const GaussianBank& bank, int i, int j);

// One step of the online learning rule. Every delta is computed from the
// pre-update centers and applied at once:
//   mu_i += (eta/sigma) * ( f_i(x) (x - mu_i)
//                           - 2 lambda sum_{j != i} f_i(mu_j) (mu_j - mu_i) )
// Throws std::runtime_error naming the offending function index when an
// update turns non-finite.
void update_centers(GaussianBank& bank, const Eigen::VectorXd& x,
                    const HyperParams& params);

// Same, with the activation vector already computed from the current centers.
void update_centers(GaussianBank& bank, const Eigen::VectorXd& x,
                    const HyperParams& params, const Eigen::VectorXd& f);

}  // namespace gclust
