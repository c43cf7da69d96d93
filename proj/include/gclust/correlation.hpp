#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gclust {

// Normalization applied to an activation vector before its outer product
// enters the accumulator. A finite p below 1 uses the same formula as the
// proper norms (quasi-norm).
struct NormMode {
    enum class Kind { None, Finite, Infinity };

    Kind kind = Kind::Infinity;
    double p = 0.0;  // exponent, meaningful only for Kind::Finite

    static NormMode none() { return {Kind::None, 0.0}; }
    static NormMode finite(double p);
    static NormMode infinity() { return {Kind::Infinity, 0.0}; }

    // Accepts "none", "inf"/"infinity", or a positive number such as "0.5".
    static NormMode parse(const std::string& text);
    std::string str() const;

    bool operator==(const NormMode&) const = default;
};

// Squared p-norm of a nonnegative vector: the denominator of one accumulator
// update. 1 under NormMode::none, (max_k f_k)^2 under the max norm,
// (sum_k f_k^p)^(2/p) for finite p. May return 0 when every entry underflowed.
double normalizer(const Eigen::VectorXd& f, const NormMode& mode);

// Running sum of normalized outer products of activation vectors. Symmetric,
// entrywise nonnegative and nondecreasing by construction. Samples whose
// normalizer falls below the underflow floor are counted and skipped; they
// carry no usable co-activation signal.
class CorrelationAccumulator {
public:
    static constexpr double kUnderflowFloor = 1e-300;

    CorrelationAccumulator() : CorrelationAccumulator(0, NormMode::infinity()) {}
    CorrelationAccumulator(int k, NormMode mode);

    // Adds f f^T / normalizer(f). Returns false when the sample was skipped.
    bool accumulate(const Eigen::VectorXd& f);

    // Zeroes the matrix and both counters.
    void reset();

    const Eigen::MatrixXd& q() const { return q_; }
    const NormMode& norm_mode() const { return mode_; }
    int k() const { return static_cast<int>(q_.rows()); }
    std::int64_t samples_seen() const { return samples_seen_; }
    std::int64_t samples_skipped() const { return samples_skipped_; }

private:
    Eigen::MatrixXd q_;
    NormMode mode_;
    std::int64_t samples_seen_ = 0;
    std::int64_t samples_skipped_ = 0;
};

// Pairwise uncentered correlation derived from an accumulator. Entries of
// dead rows (zero accumulator diagonal, the function never activated) are 0
// off the diagonal; every diagonal entry is 1.
struct CorrelationMatrix {
    Eigen::MatrixXd r;
    std::vector<bool> dead;

    int k() const { return static_cast<int>(r.rows()); }
};

// r(k,l) = q(k,l) / (sqrt(q(k,k)) * sqrt(q(l,l))). Throws when the
// accumulator has seen no samples (or holds an all-zero matrix).
CorrelationMatrix correlation_matrix(const CorrelationAccumulator& acc);

// Headerless row-major CSV with full double precision.
void write_matrix_csv(const Eigen::MatrixXd& m, std::ostream& out);
bool write_matrix_csv(const Eigen::MatrixXd& m, const std::string& path);

}  // namespace gclust
