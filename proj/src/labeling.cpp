#include "gclust/labeling.hpp"

#include <stdexcept>
#include <string>

namespace gclust {

double default_tau() { return 1.0 / 9.0; }

LabelAssignment assign_labels(const CorrelationMatrix& corr, double tau) {
    if (!(tau > 0.0 && tau <= 1.0))
        throw std::invalid_argument("tau must be in (0, 1]");
    const int k = corr.k();
    if (corr.r.cols() != k) throw std::invalid_argument("correlation matrix not square");

    LabelAssignment out;
    out.tau = tau;
    out.labels.assign(k, 0);  // 0 = not yet assigned

    std::vector<int> stack;
    for (int start = 0; start < k; ++start) {
        if (out.labels[start] != 0) continue;
        ++out.cluster_count;
        out.labels[start] = out.cluster_count;
        stack.push_back(start);
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int l = 0; l < k; ++l) {
                if (out.labels[l] == 0 && corr.r(c, l) > tau) {
                    out.labels[l] = out.cluster_count;
                    stack.push_back(l);
                }
            }
        }
    }
    return out;
}

int label_point(const GaussianBank& bank, const LabelAssignment& assignment,
                const Eigen::VectorXd& x) {
    if (static_cast<int>(assignment.labels.size()) != bank.k())
        throw std::invalid_argument("assignment size does not match bank");
    if (x.size() != bank.dim())
        throw std::invalid_argument("input dimension " + std::to_string(x.size()) +
                                    " does not match bank dimension " +
                                    std::to_string(bank.dim()));
    int best = 0;
    double best_d2 = (bank.centers.row(0).transpose() - x).squaredNorm();
    for (int i = 1; i < bank.k(); ++i) {
        double d2 = (bank.centers.row(i).transpose() - x).squaredNorm();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return assignment.labels[best];
}

}  // namespace gclust
