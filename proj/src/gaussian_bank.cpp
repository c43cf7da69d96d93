#include "gclust/gaussian_bank.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gclust {

void HyperParams::validate() const {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (dim < 1) throw std::invalid_argument("dim must be positive");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must be in (0, 1]");
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    if (norm_mode.kind == NormMode::Kind::Finite && !(norm_mode.p > 0.0))
        throw std::invalid_argument("norm exponent p must be positive");
}

GaussianBank init_bank(const HyperParams& params, std::mt19937_64& rng) {
    params.validate();
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    GaussianBank bank;
    bank.sigma = params.sigma;
    bank.centers.resize(params.k, params.dim);
    for (int i = 0; i < params.k; ++i)
        for (int d = 0; d < params.dim; ++d)
            bank.centers(i, d) = unit(rng);
    return bank;
}

Eigen::VectorXd activate(const GaussianBank& bank, const Eigen::VectorXd& x) {
    if (x.size() != bank.dim())
        throw std::invalid_argument("input dimension " + std::to_string(x.size()) +
                                    " does not match bank dimension " +
                                    std::to_string(bank.dim()));
    if (!x.allFinite()) throw std::invalid_argument("input has non-finite entries");
    Eigen::VectorXd out(bank.k());
    for (int i = 0; i < bank.k(); ++i) {
        double d2 = (bank.centers.row(i).transpose() - x).squaredNorm();
        out[i] = std::exp(-d2 / bank.sigma);
    }
    return out;
}

double repulsion_kernel(const GaussianBank& bank, int i, int j) {
    if (i < 0 || i >= bank.k() || j < 0 || j >= bank.k())
        throw std::invalid_argument("function index out of range");
    double d2 = (bank.centers.row(j) - bank.centers.row(i)).squaredNorm();
    return std::exp(-d2 / bank.sigma);
}

void update_centers(GaussianBank& bank, const Eigen::VectorXd& x,
                    const HyperParams& params) {
    update_centers(bank, x, params, activate(bank, x));
}

void update_centers(GaussianBank& bank, const Eigen::VectorXd& x,
                    const HyperParams& params, const Eigen::VectorXd& f) {
    const int k = bank.k();
    if (f.size() != k) throw std::invalid_argument("activation vector size mismatch");
    Eigen::MatrixXd& mu = bank.centers;

    // Pairwise kernel g(i,j) = exp(-|mu_j - mu_i|^2 / sigma); the shared
    // width makes it symmetric, so only the upper triangle is evaluated.
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            double d2 = (mu.row(j) - mu.row(i)).squaredNorm();
            double v = std::exp(-d2 / bank.sigma);
            g(i, j) = v;
            g(j, i) = v;
        }
    }

    Eigen::MatrixXd attract =
        f.asDiagonal() * ((-mu).rowwise() + x.transpose());
    Eigen::VectorXd gsum = g.rowwise().sum();
    Eigen::MatrixXd repulse = g * mu - gsum.asDiagonal() * mu;

    double gain = params.eta / bank.sigma;
    Eigen::MatrixXd updated =
        mu + gain * (attract - 2.0 * params.lambda * repulse);

    if (!updated.allFinite()) {
        for (int i = 0; i < k; ++i) {
            if (!updated.row(i).allFinite())
                throw std::runtime_error("numerical blowup: non-finite update for gaussian " +
                                         std::to_string(i));
        }
    }
    mu = std::move(updated);
}

}  // namespace gclust
