#include "gclust/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace gclust {

using nlohmann::json;

json config_to_json(const RunConfig& config) {
    json j;
    j["params"] = {{"k", config.params.k},
                   {"dim", config.params.dim},
                   {"sigma", config.params.sigma},
                   {"eta", config.params.eta},
                   {"lambda", config.params.lambda},
                   {"norm_mode", config.params.norm_mode.str()},
                   {"tau", config.params.tau},
                   {"steps", config.params.steps},
                   {"seed", config.params.seed}};
    j["dataset"] = {{"kind", kind_name(config.dataset.kind)},
                    {"n_points", config.dataset.n_points},
                    {"noise", config.dataset.noise},
                    {"scale", config.dataset.scale},
                    {"seed", config.dataset.seed}};
    j["data_csv"] = config.data_csv;
    if (config.snapshot_every)
        j["snapshot_every"] = *config.snapshot_every;
    else
        j["snapshot_every"] = nullptr;
    j["reset_q_on_snapshot"] = config.reset_q_on_snapshot;
    j["stream_epochs"] = config.stream_epochs;
    j["eval_points"] = config.eval_points;
    j["min_ari"] = config.min_ari;
    return j;
}

RunConfig config_from_json(const json& j) {
    RunConfig config;
    if (j.contains("params")) {
        const json& p = j.at("params");
        HyperParams& hp = config.params;
        if (p.contains("k")) hp.k = p.at("k").get<int>();
        if (p.contains("dim")) hp.dim = p.at("dim").get<int>();
        if (p.contains("sigma")) hp.sigma = p.at("sigma").get<double>();
        if (p.contains("eta")) hp.eta = p.at("eta").get<double>();
        if (p.contains("lambda")) hp.lambda = p.at("lambda").get<double>();
        if (p.contains("norm_mode"))
            hp.norm_mode = NormMode::parse(p.at("norm_mode").get<std::string>());
        if (p.contains("tau")) hp.tau = p.at("tau").get<double>();
        if (p.contains("steps")) hp.steps = p.at("steps").get<std::int64_t>();
        if (p.contains("seed")) hp.seed = p.at("seed").get<std::uint64_t>();
    }
    if (j.contains("dataset")) {
        const json& d = j.at("dataset");
        DatasetSpec& spec = config.dataset;
        if (d.contains("kind")) spec.kind = parse_kind(d.at("kind").get<std::string>());
        if (d.contains("n_points")) spec.n_points = d.at("n_points").get<int>();
        if (d.contains("noise")) spec.noise = d.at("noise").get<double>();
        if (d.contains("scale")) spec.scale = d.at("scale").get<double>();
        if (d.contains("seed")) spec.seed = d.at("seed").get<std::uint64_t>();
    }
    if (j.contains("data_csv")) config.data_csv = j.at("data_csv").get<std::string>();
    if (j.contains("snapshot_every") && !j.at("snapshot_every").is_null())
        config.snapshot_every = j.at("snapshot_every").get<std::int64_t>();
    if (j.contains("reset_q_on_snapshot"))
        config.reset_q_on_snapshot = j.at("reset_q_on_snapshot").get<bool>();
    if (j.contains("stream_epochs")) config.stream_epochs = j.at("stream_epochs").get<bool>();
    if (j.contains("eval_points")) config.eval_points = j.at("eval_points").get<int>();
    if (j.contains("min_ari")) config.min_ari = j.at("min_ari").get<double>();
    return config;
}

json report_to_json(const RunReport& report) {
    json j;
    j["config"] = config_to_json(report.config);
    j["sigma"] = report.bank.sigma;
    json centers = json::array();
    for (int i = 0; i < report.bank.k(); ++i) {
        json row = json::array();
        for (int d = 0; d < report.bank.dim(); ++d) row.push_back(report.bank.centers(i, d));
        centers.push_back(std::move(row));
    }
    j["centers"] = std::move(centers);
    j["labels"] = report.assignment.labels;
    j["cluster_count"] = report.assignment.cluster_count;
    j["tau"] = report.assignment.tau;
    j["eval"] = {{"L_found", report.eval.clusters_found},
                 {"L_truth", report.eval.clusters_truth},
                 {"ari", report.eval.ari},
                 {"n_points", report.eval.n_points},
                 {"skipped_samples", report.eval.skipped_samples}};
    json history = json::array();
    for (const SnapshotStat& s : report.history)
        history.push_back({{"step", s.step}, {"L_found", s.clusters_found}, {"ari", s.ari}});
    j["history"] = std::move(history);
    json pts = json::array();
    for (Eigen::Index i = 0; i < report.eval_x.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index d = 0; d < report.eval_x.cols(); ++d) row.push_back(report.eval_x(i, d));
        pts.push_back(std::move(row));
    }
    j["eval_points"] = std::move(pts);
    j["eval_pred"] = report.eval_pred;
    if (!report.eval_truth.empty()) j["eval_truth"] = report.eval_truth;
    j["skipped_samples"] = report.skipped_samples;
    j["duration_ms"] = report.duration_ms;
    return j;
}

RunReport report_from_json(const json& j) {
    RunReport report;
    report.config = config_from_json(j.at("config"));
    report.bank.sigma = j.at("sigma").get<double>();
    const json& centers = j.at("centers");
    const int k = static_cast<int>(centers.size());
    const int dim = k > 0 ? static_cast<int>(centers.at(0).size()) : 0;
    report.bank.centers.resize(k, dim);
    for (int i = 0; i < k; ++i)
        for (int d = 0; d < dim; ++d)
            report.bank.centers(i, d) = centers.at(i).at(d).get<double>();
    report.assignment.labels = j.at("labels").get<std::vector<int>>();
    report.assignment.cluster_count = j.at("cluster_count").get<int>();
    report.assignment.tau = j.at("tau").get<double>();
    const json& e = j.at("eval");
    report.eval = {e.at("L_found").get<int>(), e.at("L_truth").get<int>(),
                   e.at("ari").get<double>(), e.at("n_points").get<int>(),
                   e.at("skipped_samples").get<std::int64_t>()};
    for (const json& s : j.at("history"))
        report.history.push_back({s.at("step").get<std::int64_t>(),
                                  s.at("L_found").get<int>(), s.at("ari").get<double>()});
    const json& pts = j.at("eval_points");
    const int n = static_cast<int>(pts.size());
    const int pdim = n > 0 ? static_cast<int>(pts.at(0).size()) : 0;
    report.eval_x.resize(n, pdim);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < pdim; ++d) report.eval_x(i, d) = pts.at(i).at(d).get<double>();
    report.eval_pred = j.at("eval_pred").get<std::vector<int>>();
    if (j.contains("eval_truth")) report.eval_truth = j.at("eval_truth").get<std::vector<int>>();
    report.skipped_samples = j.at("skipped_samples").get<std::int64_t>();
    report.duration_ms = j.at("duration_ms").get<double>();
    return report;
}

bool write_report(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out.is_open()) return false;
    out << report_to_json(report).dump(2) << '\n';
    return out.good();
}

RunReport read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
        return report_from_json(j);
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed report " + path + ": " + e.what());
    }
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_tau_sweep_csv(const TauSweepTable& table, std::ostream& out) {
    out << "norm_mode,tau,L_found,ari,success\n";
    for (const TauSweepRow& r : table.rows)
        out << r.mode.str() << ',' << num(r.tau) << ',' << r.clusters_found << ','
            << num(r.ari) << ',' << (r.success ? 1 : 0) << '\n';
}

void write_lambda_sweep_csv(const LambdaSweepTable& table, std::ostream& out) {
    out << "lambda,L_found,ari,success\n";
    for (const LambdaSweepRow& r : table.rows)
        out << num(r.lambda) << ',' << r.clusters_found << ',' << num(r.ari) << ','
            << (r.success ? 1 : 0) << '\n';
}

void write_assignments_csv(const RunReport& report, std::ostream& out) {
    out << "k";
    for (int d = 0; d < report.bank.dim(); ++d) out << ",mu" << d;
    out << ",label\n";
    for (int i = 0; i < report.bank.k(); ++i) {
        out << i;
        for (int d = 0; d < report.bank.dim(); ++d) out << ',' << num(report.bank.centers(i, d));
        out << ',' << report.assignment.labels[i] << '\n';
    }
}

}  // namespace gclust
