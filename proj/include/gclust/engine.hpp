#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gclust/correlation.hpp"
#include "gclust/datasets.hpp"
#include "gclust/gaussian_bank.hpp"
#include "gclust/labeling.hpp"
#include "gclust/metrics.hpp"

namespace gclust {

struct RunConfig {
    HyperParams params;
    DatasetSpec dataset;
    std::string data_csv;  // when nonempty, points are read from this file
                           // instead of being generated from `dataset`
    std::optional<std::int64_t> snapshot_every;
    bool reset_q_on_snapshot = false;
    bool stream_epochs = false;  // shuffled epochs instead of i.i.d. draws
    int eval_points = 2000;
    double min_ari = 0.9;

    void validate() const;
};

struct SnapshotStat {
    std::int64_t step = 0;
    int clusters_found = 0;
    double ari = 0.0;

    bool operator==(const SnapshotStat&) const = default;
};

struct RunReport {
    GaussianBank bank;                 // final centers
    LabelAssignment assignment;        // labels at the final step
    EvalReport eval;
    std::vector<SnapshotStat> history;
    std::optional<CorrelationAccumulator> accumulator;  // final state
    Eigen::MatrixXd eval_x;            // evaluation points, one per row
    std::vector<int> eval_truth;       // empty when the data has no labels
    std::vector<int> eval_pred;
    std::int64_t skipped_samples = 0;
    double duration_ms = 0.0;
    RunConfig config;
};

// The online loop. Per stream step: activations are computed once from the
// pre-update centers and feed both the accumulator and the center update.
// Labels and evaluation happen at every snapshot and always at the last step.
// Deterministic per seed (wall clock aside).
RunReport run(const RunConfig& config);

struct TauSweepRow {
    NormMode mode;
    double tau = 0.0;
    int clusters_found = 0;
    double ari = 0.0;
    bool success = false;
};

struct TauSweepSummary {
    NormMode mode;
    std::vector<double> passing;  // tau values that succeed, grid order
    // Longest contiguous run of passing grid cells (first one on ties).
    double run_lo = 0.0;
    double run_hi = 0.0;
    int run_len = 0;
};

struct TauSweepTable {
    std::vector<TauSweepRow> rows;
    std::vector<TauSweepSummary> summaries;
};

// Trains once per norm mode (the accumulator depends on it; the center
// trajectory does not), then labels and evaluates the final correlation
// matrix at every tau in the grid. Branches are independent and may run on
// up to `threads` workers.
TauSweepTable sweep_thresholds(const RunConfig& config,
                               const std::vector<NormMode>& modes,
                               const std::vector<double>& tau_grid,
                               unsigned threads = 1);

struct LambdaSweepRow {
    double lambda = 0.0;
    int clusters_found = 0;
    double ari = 0.0;
    bool success = false;
};

struct LambdaSweepTable {
    std::vector<LambdaSweepRow> rows;
};

// One full run per lambda, everything else fixed.
LambdaSweepTable sweep_lambda(const RunConfig& config,
                              const std::vector<double>& lambdas,
                              unsigned threads = 1);

// Statelessly mixes a seed with a salt so the independent random streams of
// a run (init, stream order, evaluation set) never collide.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);
inline constexpr std::uint64_t kStreamSalt = 1;
inline constexpr std::uint64_t kEvalSalt = 2;

// lo, lo+step, ... up to hi inclusive (within half a step of it).
std::vector<double> arithmetic_grid(double lo, double hi, double step);

// The evaluation set a run with this config labels at each snapshot: a fresh
// draw from the dataset spec under a derived seed, or a resample of the CSV
// points. Exposed so sweeps and tests can reproduce it.
Dataset make_eval_dataset(const RunConfig& config, const Dataset& train_data);

}  // namespace gclust
