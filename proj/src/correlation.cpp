#include "gclust/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace gclust {

NormMode NormMode::finite(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("norm exponent p must be positive");
    return {Kind::Finite, p};
}

NormMode NormMode::parse(const std::string& text) {
    if (text == "none") return none();
    if (text == "inf" || text == "infinity") return infinity();
    std::size_t pos = 0;
    double p = 0.0;
    try {
        p = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("unknown norm mode '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("unknown norm mode '" + text + "'");
    return finite(p);
}

std::string NormMode::str() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::Infinity: return "inf";
        case Kind::Finite: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", p);
            return buf;
        }
    }
    return "none";
}

double normalizer(const Eigen::VectorXd& f, const NormMode& mode) {
    switch (mode.kind) {
        case NormMode::Kind::None:
            return 1.0;
        case NormMode::Kind::Infinity: {
            double m = f.size() > 0 ? f.maxCoeff() : 0.0;
            return m * m;
        }
        case NormMode::Kind::Finite: {
            double s = 0.0;
            for (Eigen::Index i = 0; i < f.size(); ++i) s += std::pow(f[i], mode.p);
            return std::pow(s, 2.0 / mode.p);
        }
    }
    return 1.0;
}

CorrelationAccumulator::CorrelationAccumulator(int k, NormMode mode)
    : q_(Eigen::MatrixXd::Zero(k, k)), mode_(mode) {}

bool CorrelationAccumulator::accumulate(const Eigen::VectorXd& f) {
    if (f.size() != q_.rows())
        throw std::invalid_argument("activation vector size mismatch");
    double z = normalizer(f, mode_);
    if (!(z >= kUnderflowFloor)) {
        ++samples_skipped_;
        return false;
    }
    q_.noalias() += (f * f.transpose()) / z;
    ++samples_seen_;
    return true;
}

void CorrelationAccumulator::reset() {
    q_.setZero();
    samples_seen_ = 0;
    samples_skipped_ = 0;
}

CorrelationMatrix correlation_matrix(const CorrelationAccumulator& acc) {
    if (acc.samples_seen() < 1)
        throw std::runtime_error("empty accumulator: no samples contributed");
    const Eigen::MatrixXd& q = acc.q();
    const int k = acc.k();

    CorrelationMatrix out;
    out.r = Eigen::MatrixXd::Zero(k, k);
    out.dead.assign(k, false);

    Eigen::VectorXd d(k);
    bool any_alive = false;
    for (int i = 0; i < k; ++i) {
        out.dead[i] = q(i, i) == 0.0;
        d[i] = std::sqrt(q(i, i));
        any_alive = any_alive || !out.dead[i];
    }
    if (!any_alive) throw std::runtime_error("empty accumulator: all-zero matrix");

    for (int i = 0; i < k; ++i) {
        out.r(i, i) = 1.0;
        if (out.dead[i]) continue;
        for (int j = i + 1; j < k; ++j) {
            if (out.dead[j]) continue;
            double v = q(i, j) / (d[i] * d[j]);
            out.r(i, j) = v;
            out.r(j, i) = v;
        }
    }
    return out;
}

void write_matrix_csv(const Eigen::MatrixXd& m, std::ostream& out) {
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            if (j > 0) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

bool write_matrix_csv(const Eigen::MatrixXd& m, const std::string& path) {
    std::ofstream out(path);
    if (!out.is_open()) return false;
    write_matrix_csv(m, out);
    return out.good();
}

}  // namespace gclust
