#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gclust {

enum class DatasetKind { Circles, Moons, Blobs, Aniso, Varied, None };

DatasetKind parse_kind(const std::string& name);  // throws on unknown kind
std::string kind_name(DatasetKind kind);

struct DatasetSpec {
    DatasetKind kind = DatasetKind::Moons;
    int n_points = 1500;
    double noise = 0.05;  // Gaussian noise std for circles/moons
    double scale = 1.0;   // applied after standardization
    std::uint64_t seed = 1;

    void validate() const;
};

// A point cloud with optional ground-truth labels.
struct Dataset {
    Eigen::MatrixXd points;  // n x D
    std::vector<int> truth;  // empty when the source carries no labels

    int n() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }
    bool has_truth() const { return !truth.empty(); }
    int truth_cluster_count() const;
};

// Generation pipeline: raw points per kind, per-coordinate standardization to
// zero mean and unit variance, then multiplication by spec.scale.
// Deterministic for a given spec.
//   circles: two concentric circles, inner radius factor 0.5, plus noise
//   moons:   two interleaving half-circles, plus noise
//   blobs:   three isotropic Gaussian blobs, std 1
//   aniso:   blobs sheared by a fixed linear map
//   varied:  three blobs with stds 1.0, 2.5, 0.5
//   none:    uniform points on the unit square, no truth labels
Dataset generate(const DatasetSpec& spec);

enum class StreamMode {
    UniformReplacement,  // i.i.d. draws from the dataset
    ShuffledEpochs,      // every point once per epoch, reshuffled between epochs
};

// Yields exactly `steps` points, deterministically per seed. The dataset
// must outlive the sampler.
class StreamSampler {
public:
    StreamSampler(const Dataset& data, std::int64_t steps, std::uint64_t seed,
                  StreamMode mode = StreamMode::UniformReplacement);

    bool has_next() const { return remaining_ > 0; }
    std::int64_t remaining() const { return remaining_; }
    Eigen::VectorXd next();

private:
    const Dataset* data_;
    std::int64_t remaining_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> pick_;
    StreamMode mode_;
    std::vector<int> order_;  // epoch order, ShuffledEpochs only
    std::size_t cursor_ = 0;
};

// CSV with header "x0,...,x{D-1},truth"; the truth cell is empty when the
// dataset has no labels.
void write_csv(const Dataset& data, std::ostream& out);
bool write_csv(const Dataset& data, const std::string& path);
Dataset read_csv(std::istream& in);
Dataset read_csv_file(const std::string& path);

}  // namespace gclust
