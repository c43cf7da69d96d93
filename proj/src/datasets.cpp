#include "gclust/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gclust {

namespace {

std::vector<double> linspace(double a, double b, int m, bool endpoint) {
    std::vector<double> t(m);
    if (m == 1) {
        t[0] = a;
        return t;
    }
    double step = (b - a) / (endpoint ? m - 1 : m);
    for (int i = 0; i < m; ++i) t[i] = a + step * i;
    return t;
}

void add_noise(Eigen::MatrixXd& pts, double noise, std::mt19937_64& rng) {
    if (noise == 0.0) return;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Eigen::Index i = 0; i < pts.rows(); ++i)
        for (Eigen::Index d = 0; d < pts.cols(); ++d)
            pts(i, d) += noise * gauss(rng);
}

// Canonical maximally separated blob geometry: an equilateral triple whose
// standardized pairwise separation sits just under the ceiling sqrt(6) that
// per-coordinate standardization imposes on any three-cluster mixture. The
// reference comparison suite pins its blob layout the same way (one fixed
// generator state); seeds vary the sampled points, not the layout.
Eigen::MatrixXd blob_centers() {
    const double r = 4.51;  // separation 2.42, blob std 0.155 after standardization
    Eigen::MatrixXd c(3, 2);
    for (int i = 0; i < 3; ++i) {
        double a = 2.0 * std::numbers::pi * i / 3.0;
        c(i, 0) = r * std::cos(a);
        c(i, 1) = r * std::sin(a);
    }
    return c;
}

Dataset make_blobs(int n, const std::array<double, 3>& stds, std::mt19937_64& rng) {
    Dataset out;
    out.points.resize(n, 2);
    out.truth.resize(n);
    Eigen::MatrixXd centers = blob_centers();
    std::normal_distribution<double> gauss(0.0, 1.0);
    int counts[3] = {n / 3, n / 3, n / 3};
    for (int i = 0; i < n % 3; ++i) ++counts[i];
    int row = 0;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < counts[c]; ++i, ++row) {
            for (int d = 0; d < 2; ++d)
                out.points(row, d) = centers(c, d) + stds[c] * gauss(rng);
            out.truth[row] = c;
        }
    }
    return out;
}

Dataset make_raw(const DatasetSpec& spec, std::mt19937_64& rng) {
    const int n = spec.n_points;
    Dataset out;
    switch (spec.kind) {
        case DatasetKind::Circles: {
            // uniform over the combined curve: the outer circle carries
            // twice the circumference of the factor-0.5 inner one
            int n_out = (2 * n) / 3, n_in = n - n_out;
            out.points.resize(n, 2);
            out.truth.resize(n);
            auto t_out = linspace(0.0, 2.0 * std::numbers::pi, n_out, false);
            auto t_in = linspace(0.0, 2.0 * std::numbers::pi, n_in, false);
            for (int i = 0; i < n_out; ++i) {
                out.points(i, 0) = std::cos(t_out[i]);
                out.points(i, 1) = std::sin(t_out[i]);
                out.truth[i] = 0;
            }
            for (int i = 0; i < n_in; ++i) {
                out.points(n_out + i, 0) = 0.5 * std::cos(t_in[i]);
                out.points(n_out + i, 1) = 0.5 * std::sin(t_in[i]);
                out.truth[n_out + i] = 1;
            }
            add_noise(out.points, spec.noise, rng);
            break;
        }
        case DatasetKind::Moons: {
            int n_out = n / 2, n_in = n - n_out;
            out.points.resize(n, 2);
            out.truth.resize(n);
            auto t_out = linspace(0.0, std::numbers::pi, n_out, true);
            auto t_in = linspace(0.0, std::numbers::pi, n_in, true);
            for (int i = 0; i < n_out; ++i) {
                out.points(i, 0) = std::cos(t_out[i]);
                out.points(i, 1) = std::sin(t_out[i]);
                out.truth[i] = 0;
            }
            for (int i = 0; i < n_in; ++i) {
                out.points(n_out + i, 0) = 1.0 - std::cos(t_in[i]);
                out.points(n_out + i, 1) = 0.5 - std::sin(t_in[i]);
                out.truth[n_out + i] = 1;
            }
            add_noise(out.points, spec.noise, rng);
            break;
        }
        case DatasetKind::Blobs:
            out = make_blobs(n, {0.5, 0.5, 0.5}, rng);
            break;
        case DatasetKind::Aniso: {
            out = make_blobs(n, {0.5, 0.5, 0.5}, rng);
            Eigen::Matrix2d shear;
            shear << 0.6, -0.6, -0.4, 0.8;
            out.points = out.points * shear;
            break;
        }
        case DatasetKind::Varied:
            out = make_blobs(n, {1.0, 2.5, 0.5}, rng);
            break;
        case DatasetKind::None: {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            out.points.resize(n, 2);
            for (int i = 0; i < n; ++i)
                for (int d = 0; d < 2; ++d) out.points(i, d) = unit(rng);
            break;
        }
    }
    return out;
}

void standardize(Eigen::MatrixXd& pts) {
    for (Eigen::Index d = 0; d < pts.cols(); ++d) {
        double mean = pts.col(d).mean();
        pts.col(d).array() -= mean;
        double var = pts.col(d).squaredNorm() / static_cast<double>(pts.rows());
        double sd = std::sqrt(var);
        if (sd > 0.0) pts.col(d) /= sd;
    }
}

}  // namespace

DatasetKind parse_kind(const std::string& name) {
    if (name == "circles") return DatasetKind::Circles;
    if (name == "moons") return DatasetKind::Moons;
    if (name == "blobs") return DatasetKind::Blobs;
    if (name == "aniso") return DatasetKind::Aniso;
    if (name == "varied") return DatasetKind::Varied;
    if (name == "none") return DatasetKind::None;
    throw std::invalid_argument("unknown dataset kind '" + name + "'");
}

std::string kind_name(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::Circles: return "circles";
        case DatasetKind::Moons: return "moons";
        case DatasetKind::Blobs: return "blobs";
        case DatasetKind::Aniso: return "aniso";
        case DatasetKind::Varied: return "varied";
        case DatasetKind::None: return "none";
    }
    return "none";
}

void DatasetSpec::validate() const {
    if (n_points < 1) throw std::invalid_argument("n_points must be positive");
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    if (noise < 0.0) throw std::invalid_argument("noise must be nonnegative");
}

int Dataset::truth_cluster_count() const {
    std::set<int> distinct(truth.begin(), truth.end());
    return static_cast<int>(distinct.size());
}

Dataset generate(const DatasetSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    Dataset out = make_raw(spec, rng);
    standardize(out.points);
    out.points *= spec.scale;
    return out;
}

StreamSampler::StreamSampler(const Dataset& data, std::int64_t steps,
                             std::uint64_t seed, StreamMode mode)
    : data_(&data), remaining_(steps), rng_(seed), pick_(0, data.n() - 1), mode_(mode) {
    if (data.n() < 1) throw std::invalid_argument("cannot stream from an empty dataset");
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    if (mode_ == StreamMode::ShuffledEpochs) {
        order_.resize(data.n());
        for (int i = 0; i < data.n(); ++i) order_[i] = i;
        std::shuffle(order_.begin(), order_.end(), rng_);
    }
}

Eigen::VectorXd StreamSampler::next() {
    if (remaining_ <= 0) throw std::runtime_error("stream exhausted");
    --remaining_;
    if (mode_ == StreamMode::UniformReplacement)
        return data_->points.row(pick_(rng_)).transpose();
    if (cursor_ == order_.size()) {
        std::shuffle(order_.begin(), order_.end(), rng_);
        cursor_ = 0;
    }
    return data_->points.row(order_[cursor_++]).transpose();
}

void write_csv(const Dataset& data, std::ostream& out) {
    for (int d = 0; d < data.dim(); ++d) out << 'x' << d << ',';
    out << "truth\n";
    char buf[64];
    for (int i = 0; i < data.n(); ++i) {
        for (int d = 0; d < data.dim(); ++d) {
            std::snprintf(buf, sizeof(buf), "%.17g", data.points(i, d));
            out << buf << ',';
        }
        if (data.has_truth()) out << data.truth[i];
        out << '\n';
    }
}

bool write_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out.is_open()) return false;
    write_csv(data, out);
    return out.good();
}

Dataset read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    if (header.size() < 2 || header.back() != "truth")
        throw std::runtime_error("csv header must be x0,...,truth");
    const int dim = static_cast<int>(header.size()) - 1;

    std::vector<std::vector<double>> coords;
    std::vector<int> truth;
    bool saw_truth = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::stringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");  // trailing empty truth
        if (static_cast<int>(cells.size()) != dim + 1)
            throw std::runtime_error("csv row has wrong number of cells: " + line);
        std::vector<double> row(dim);
        for (int d = 0; d < dim; ++d) row[d] = std::stod(cells[d]);
        coords.push_back(std::move(row));
        if (!cells.back().empty()) {
            saw_truth = true;
            truth.push_back(std::stoi(cells.back()));
        } else if (saw_truth) {
            throw std::runtime_error("csv mixes labeled and unlabeled rows");
        }
    }
    if (saw_truth && truth.size() != coords.size())
        throw std::runtime_error("csv mixes labeled and unlabeled rows");

    Dataset out;
    out.points.resize(static_cast<Eigen::Index>(coords.size()), dim);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (int d = 0; d < dim; ++d) out.points(static_cast<Eigen::Index>(i), d) = coords[i][d];
    if (saw_truth) out.truth = std::move(truth);
    return out;
}

Dataset read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw std::runtime_error("cannot open " + path);
    return read_csv(in);
}

}  // namespace gclust
