#include "gclust/engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gclust {

namespace {

// Evaluates one labeling of the bank against the evaluation set.
struct Evaluation {
    std::vector<int> pred;
    double ari = 1.0;
    int clusters_found = 0;
    int clusters_truth = 1;
};

Evaluation evaluate(const GaussianBank& bank, const LabelAssignment& assignment,
                    const Dataset& eval_data) {
    Evaluation ev;
    ev.pred.resize(eval_data.n());
    for (int i = 0; i < eval_data.n(); ++i)
        ev.pred[i] = label_point(bank, assignment, eval_data.points.row(i).transpose());
    // The found cluster count is what the evaluation can see: clusters whose
    // region holds no data at all never appear among the predictions.
    std::vector<bool> seen(static_cast<std::size_t>(assignment.cluster_count) + 1, false);
    for (int label : ev.pred) {
        if (!seen[label]) {
            seen[label] = true;
            ++ev.clusters_found;
        }
    }
    if (eval_data.has_truth()) {
        ev.ari = adjusted_rand_index(ev.pred, eval_data.truth);
        ev.clusters_truth = eval_data.truth_cluster_count();
    }
    // Without ground truth a single cluster is the expected outcome and
    // agreement is vacuous: clusters_truth = 1, ari = 1.
    return ev;
}

Dataset load_train_dataset(const RunConfig& config) {
    if (!config.data_csv.empty()) return read_csv_file(config.data_csv);
    return generate(config.dataset);
}

// Runs branch indices [0, n) on up to `threads` workers; rethrows the first
// branch failure after joining.
void run_branches(int n, unsigned threads, const std::function<void(int)>& work) {
    unsigned nthreads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (nthreads == 1) {
        for (int i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (int i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1)) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<double> arithmetic_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double v = lo + step * i;
        if (v > hi + step / 2.0) break;
        grid.push_back(v);
    }
    return grid;
}

void RunConfig::validate() const {
    params.validate();
    if (data_csv.empty()) dataset.validate();
    if (snapshot_every && *snapshot_every < 1)
        throw std::invalid_argument("snapshot_every must be positive");
    if (eval_points < 1) throw std::invalid_argument("eval_points must be positive");
}

Dataset make_eval_dataset(const RunConfig& config, const Dataset& train_data) {
    if (config.data_csv.empty()) {
        DatasetSpec spec = config.dataset;
        spec.n_points = config.eval_points;
        spec.seed = derive_seed(config.dataset.seed, kEvalSalt);
        return generate(spec);
    }
    // CSV input has no generator to draw from; resample the file's points.
    Dataset eval;
    eval.points.resize(config.eval_points, train_data.dim());
    if (train_data.has_truth()) eval.truth.resize(config.eval_points);
    std::mt19937_64 rng(derive_seed(config.params.seed, kEvalSalt));
    std::uniform_int_distribution<int> pick(0, train_data.n() - 1);
    for (int i = 0; i < config.eval_points; ++i) {
        int j = pick(rng);
        eval.points.row(i) = train_data.points.row(j);
        if (train_data.has_truth()) eval.truth[i] = train_data.truth[j];
    }
    return eval;
}

RunReport run(const RunConfig& config) {
    config.validate();
    auto t0 = std::chrono::steady_clock::now();

    Dataset data = load_train_dataset(config);
    Dataset eval_data = make_eval_dataset(config, data);

    // The bank always lives in the data's input space.
    HyperParams hp = config.params;
    hp.dim = data.dim();

    std::mt19937_64 init_rng(hp.seed);
    GaussianBank bank = init_bank(hp, init_rng);
    StreamSampler stream(data, hp.steps, derive_seed(hp.seed, kStreamSalt),
                         config.stream_epochs ? StreamMode::ShuffledEpochs
                                              : StreamMode::UniformReplacement);
    CorrelationAccumulator acc(hp.k, hp.norm_mode);

    RunReport report;
    report.config = config;

    for (std::int64_t step = 1; step <= hp.steps; ++step) {
        Eigen::VectorXd x = stream.next();
        Eigen::VectorXd f = activate(bank, x);
        acc.accumulate(f);
        try {
            update_centers(bank, x, hp, f);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(std::string(e.what()) + " at step " +
                                     std::to_string(step));
        }

        bool last = step == hp.steps;
        bool snap = last || (config.snapshot_every && step % *config.snapshot_every == 0);
        if (!snap) continue;

        CorrelationMatrix corr;
        try {
            corr = correlation_matrix(acc);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(std::string(e.what()) + " at step " +
                                     std::to_string(step));
        }
        LabelAssignment assignment = assign_labels(corr, hp.tau);
        Evaluation ev = evaluate(bank, assignment, eval_data);
        report.history.push_back({step, ev.clusters_found, ev.ari});

        if (last) {
            report.assignment = std::move(assignment);
            report.eval = {ev.clusters_found, ev.clusters_truth, ev.ari,
                           eval_data.n(), acc.samples_skipped()};
            report.eval_pred = std::move(ev.pred);
        } else if (config.reset_q_on_snapshot) {
            acc.reset();
        }
    }

    report.bank = std::move(bank);
    report.accumulator = std::move(acc);
    report.eval_x = std::move(eval_data.points);
    report.eval_truth = std::move(eval_data.truth);
    report.skipped_samples = report.accumulator->samples_skipped();
    report.duration_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return report;
}

TauSweepTable sweep_thresholds(const RunConfig& config,
                               const std::vector<NormMode>& modes,
                               const std::vector<double>& tau_grid,
                               unsigned threads) {
    config.validate();
    if (modes.empty()) throw std::invalid_argument("no norm modes given");
    if (tau_grid.empty()) throw std::invalid_argument("tau grid is empty");
    for (double tau : tau_grid)
        if (!(tau > 0.0 && tau <= 1.0))
            throw std::invalid_argument("tau grid values must be in (0, 1]");

    std::vector<std::vector<TauSweepRow>> per_mode(modes.size());
    run_branches(static_cast<int>(modes.size()), threads, [&](int m) {
        RunConfig branch = config;
        branch.params.norm_mode = modes[m];
        RunReport rep = run(branch);
        CorrelationMatrix corr = correlation_matrix(*rep.accumulator);

        Dataset eval_data;
        eval_data.points = rep.eval_x;
        eval_data.truth = rep.eval_truth;

        std::vector<TauSweepRow>& rows = per_mode[m];
        rows.reserve(tau_grid.size());
        for (double tau : tau_grid) {
            LabelAssignment assignment = assign_labels(corr, tau);
            Evaluation ev = evaluate(rep.bank, assignment, eval_data);
            EvalReport er{ev.clusters_found, ev.clusters_truth, ev.ari,
                          eval_data.n(), rep.skipped_samples};
            rows.push_back({modes[m], tau, ev.clusters_found, ev.ari,
                            success(er, branch.min_ari)});
        }
    });

    TauSweepTable table;
    for (std::size_t m = 0; m < modes.size(); ++m) {
        TauSweepSummary summary;
        summary.mode = modes[m];
        int run_start = -1, run_len = 0;
        int best_start = -1, best_len = 0;
        const auto& rows = per_mode[m];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].success) {
                summary.passing.push_back(rows[i].tau);
                if (run_len == 0) run_start = static_cast<int>(i);
                ++run_len;
                if (run_len > best_len) {
                    best_len = run_len;
                    best_start = run_start;
                }
            } else {
                run_len = 0;
            }
            table.rows.push_back(rows[i]);
        }
        if (best_len > 0) {
            summary.run_lo = rows[best_start].tau;
            summary.run_hi = rows[best_start + best_len - 1].tau;
            summary.run_len = best_len;
        }
        table.summaries.push_back(std::move(summary));
    }
    return table;
}

LambdaSweepTable sweep_lambda(const RunConfig& config,
                              const std::vector<double>& lambdas,
                              unsigned threads) {
    config.validate();
    if (lambdas.empty()) throw std::invalid_argument("lambda grid is empty");
    for (double l : lambdas)
        if (!(l > 0.0)) throw std::invalid_argument("lambda values must be positive");

    LambdaSweepTable table;
    table.rows.resize(lambdas.size());
    run_branches(static_cast<int>(lambdas.size()), threads, [&](int i) {
        RunConfig branch = config;
        branch.params.lambda = lambdas[i];
        RunReport rep = run(branch);
        table.rows[i] = {lambdas[i], rep.eval.clusters_found, rep.eval.ari,
                         success(rep.eval, branch.min_ari)};
    });
    return table;
}

}  // namespace gclust
