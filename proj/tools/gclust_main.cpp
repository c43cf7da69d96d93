#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gclust/engine.hpp"
#include "gclust/report_io.hpp"
#include "gclust/svg_plot.hpp"

namespace {

// lo:hi:step triple or a comma-separated list
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double lo, hi, step;
        char c1, c2;
        std::istringstream ss(text);
        if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':')
            throw std::invalid_argument("grid must be lo:hi:step, got '" + text + "'");
        return gclust::arithmetic_grid(lo, hi, step);
    }
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty()) grid.push_back(std::stod(cell));
    }
    return grid;
}

std::vector<gclust::NormMode> parse_modes(const std::string& text) {
    std::vector<gclust::NormMode> modes;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty()) modes.push_back(gclust::NormMode::parse(cell));
    }
    return modes;
}

struct RunFlags {
    std::string dataset, data_csv, config_path;
    std::optional<int> n_points;
    std::optional<double> noise, scale, sigma, eta, lambda, tau, min_ari;
    std::optional<int> k, eval_points;
    std::optional<std::int64_t> steps, snapshot_every;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> norm;
    bool reset_q = false;
    bool stream_epochs = false;
};

// Precedence: command-line flags over config file over defaults.
gclust::RunConfig build_config(const RunFlags& f) {
    gclust::RunConfig config;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in.is_open()) throw std::runtime_error("cannot open " + f.config_path);
        nlohmann::json j;
        in >> j;
        config = gclust::config_from_json(j.contains("config") ? j.at("config") : j);
    }
    if (!f.dataset.empty()) config.dataset.kind = gclust::parse_kind(f.dataset);
    if (!f.data_csv.empty()) config.data_csv = f.data_csv;
    if (f.n_points) config.dataset.n_points = *f.n_points;
    if (f.noise) config.dataset.noise = *f.noise;
    if (f.scale) config.dataset.scale = *f.scale;
    if (f.seed) {
        config.dataset.seed = *f.seed;
        config.params.seed = *f.seed;
    }
    if (f.k) config.params.k = *f.k;
    if (f.sigma) config.params.sigma = *f.sigma;
    if (f.eta) config.params.eta = *f.eta;
    if (f.lambda) config.params.lambda = *f.lambda;
    if (f.tau) config.params.tau = *f.tau;
    if (f.norm) config.params.norm_mode = gclust::NormMode::parse(*f.norm);
    if (f.steps) config.params.steps = *f.steps;
    if (f.snapshot_every) config.snapshot_every = *f.snapshot_every;
    if (f.reset_q) config.reset_q_on_snapshot = true;
    if (f.stream_epochs) config.stream_epochs = true;
    if (f.eval_points) config.eval_points = *f.eval_points;
    if (f.min_ari) config.min_ari = *f.min_ari;
    return config;
}

void add_run_flags(CLI::App* cmd, RunFlags& f) {
    cmd->add_option("--dataset", f.dataset, "dataset kind: circles|moons|blobs|aniso|varied|none");
    cmd->add_option("--data", f.data_csv, "CSV point cloud to cluster instead of a generated dataset");
    cmd->add_option("--config", f.config_path, "JSON config (or run report) to start from");
    cmd->add_option("--n", f.n_points, "points in the generated dataset");
    cmd->add_option("--noise", f.noise, "noise std for circles/moons");
    cmd->add_option("--scale", f.scale, "dataset scale factor");
    cmd->add_option("--seed", f.seed, "seed for dataset, init and stream");
    cmd->add_option("--k", f.k, "number of Gaussian functions");
    cmd->add_option("--sigma", f.sigma, "Gaussian width");
    cmd->add_option("--eta", f.eta, "learning rate");
    cmd->add_option("--lambda", f.lambda, "repulsion strength");
    cmd->add_option("--p", f.norm, "norm mode: none, inf or a positive exponent");
    cmd->add_option("--tau", f.tau, "correlation threshold");
    cmd->add_option("--steps", f.steps, "stream length N");
    cmd->add_option("--snapshot-every", f.snapshot_every, "label every this many steps");
    cmd->add_flag("--reset-q", f.reset_q, "reset the accumulator after each snapshot");
    cmd->add_flag("--stream-epochs", f.stream_epochs,
                  "stream shuffled epochs instead of i.i.d. draws");
    cmd->add_option("--eval-points", f.eval_points, "evaluation set size");
    cmd->add_option("--min-ari", f.min_ari, "agreement bar for success");
}

int cmd_gen(const gclust::DatasetSpec& spec, const std::string& out_path) {
    gclust::Dataset data = gclust::generate(spec);
    if (out_path.empty()) {
        gclust::write_csv(data, std::cout);
        return 0;
    }
    if (!gclust::write_csv(data, out_path)) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 1;
    }
    return 0;
}

int cmd_run(const RunFlags& flags, const std::string& out_path,
            const std::string& assignments_path, const std::string& dump_q,
            const std::string& dump_r) {
    gclust::RunConfig config = build_config(flags);
    gclust::RunReport report = gclust::run(config);

    std::cout << "L_found=" << report.eval.clusters_found
              << " L_truth=" << report.eval.clusters_truth << " ARI=" << report.eval.ari
              << " skipped=" << report.skipped_samples << '\n';

    if (!out_path.empty() && !gclust::write_report(report, out_path))
        throw std::runtime_error("cannot write " + out_path);
    if (!assignments_path.empty()) {
        std::ofstream out(assignments_path);
        if (!out.is_open()) throw std::runtime_error("cannot write " + assignments_path);
        gclust::write_assignments_csv(report, out);
    }
    if (!dump_q.empty() && !gclust::write_matrix_csv(report.accumulator->q(), dump_q))
        throw std::runtime_error("cannot write " + dump_q);
    if (!dump_r.empty()) {
        gclust::CorrelationMatrix corr = gclust::correlation_matrix(*report.accumulator);
        if (!gclust::write_matrix_csv(corr.r, dump_r))
            throw std::runtime_error("cannot write " + dump_r);
    }
    return 0;
}

int cmd_sweep(const RunFlags& flags, const std::string& mode, const std::string& taus,
              const std::string& norm_modes, const std::string& lambdas,
              unsigned threads, const std::string& out_path) {
    gclust::RunConfig config = build_config(flags);

    std::ostringstream csv;
    if (mode == "tau") {
        std::vector<double> grid = parse_grid(taus);
        std::vector<gclust::NormMode> modes = parse_modes(norm_modes);
        gclust::TauSweepTable table = gclust::sweep_thresholds(config, modes, grid, threads);
        gclust::write_tau_sweep_csv(table, csv);
    } else if (mode == "lambda") {
        std::vector<double> grid = parse_grid(lambdas);
        gclust::LambdaSweepTable table = gclust::sweep_lambda(config, grid, threads);
        gclust::write_lambda_sweep_csv(table, csv);
    } else {
        throw std::invalid_argument("sweep mode must be tau or lambda");
    }

    if (out_path.empty()) {
        std::cout << csv.str();
        return 0;
    }
    std::ofstream out(out_path);
    if (!out.is_open()) throw std::runtime_error("cannot write " + out_path);
    out << csv.str();
    return 0;
}

int cmd_plot(const gclust::PlotSpec& spec) {
    gclust::RunReport report = gclust::read_report(spec.report_path);
    std::string svg = gclust::render_svg(report, spec);
    std::ofstream out(spec.out_path);
    if (!out.is_open()) throw std::runtime_error("cannot write " + spec.out_path);
    out << svg;
    if (!out.good()) throw std::runtime_error("cannot write " + spec.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online clustering with a bank of Gaussian functions"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind, gen_out;
    int gen_n = 1500;
    double gen_noise = 0.05, gen_scale = 1.0;
    std::uint64_t gen_seed = 1;
    CLI::App* gen = app.add_subcommand("gen", "generate a dataset CSV");
    gen->add_option("--kind", gen_kind, "circles|moons|blobs|aniso|varied|none")->required();
    gen->add_option("--n", gen_n, "number of points");
    gen->add_option("--noise", gen_noise, "noise std for circles/moons");
    gen->add_option("--scale", gen_scale, "scale factor applied after standardization");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--out", gen_out, "output path (default: stdout)");

    // run
    RunFlags run_flags;
    std::string run_out, run_assignments, run_dump_q, run_dump_r;
    CLI::App* run_cmd = app.add_subcommand("run", "train online and label");
    add_run_flags(run_cmd, run_flags);
    run_cmd->add_option("-o,--out", run_out, "write the JSON run report here");
    run_cmd->add_option("--assignments", run_assignments, "write per-function labels CSV");
    run_cmd->add_option("--dump-q", run_dump_q, "write the accumulator matrix CSV");
    run_cmd->add_option("--dump-r", run_dump_r, "write the correlation matrix CSV");

    // sweep
    RunFlags sweep_flags;
    std::string sweep_mode = "tau", sweep_out;
    std::string sweep_taus = "0.01:0.30:0.01";
    std::string sweep_norms = "none,0.5,1,2,4,inf";
    std::string sweep_lambdas = "0.01,0.5,5";
    unsigned sweep_threads = 1;
    CLI::App* sweep = app.add_subcommand("sweep", "threshold or lambda sweep");
    add_run_flags(sweep, sweep_flags);
    sweep->add_option("--mode", sweep_mode, "tau or lambda")
        ->check(CLI::IsMember({"tau", "lambda"}));
    sweep->add_option("--taus", sweep_taus, "tau grid, lo:hi:step or comma list");
    sweep->add_option("--norm-modes", sweep_norms, "comma list of norm modes");
    sweep->add_option("--lambdas", sweep_lambdas, "comma list of lambda values");
    sweep->add_option("--threads", sweep_threads, "parallel branches");
    sweep->add_option("-o,--out", sweep_out, "output CSV path (default: stdout)");

    // plot
    gclust::PlotSpec plot_spec;
    CLI::App* plot = app.add_subcommand("plot", "render a run report as SVG");
    plot->add_option("--report", plot_spec.report_path, "JSON run report")->required();
    plot->add_option("-o,--out", plot_spec.out_path, "output SVG path")->required();
    plot->add_option("--width", plot_spec.width, "image width in px")->check(CLI::PositiveNumber);
    plot->add_option("--height", plot_spec.height, "image height in px")->check(CLI::PositiveNumber);
    plot->add_option("--points", plot_spec.point_count, "points to draw")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    }

    try {
        if (gen->parsed()) {
            gclust::DatasetSpec spec;
            spec.kind = gclust::parse_kind(gen_kind);
            spec.n_points = gen_n;
            spec.noise = gen_noise;
            spec.scale = gen_scale;
            spec.seed = gen_seed;
            return cmd_gen(spec, gen_out);
        }
        if (run_cmd->parsed())
            return cmd_run(run_flags, run_out, run_assignments, run_dump_q, run_dump_r);
        if (sweep->parsed())
            return cmd_sweep(sweep_flags, sweep_mode, sweep_taus, sweep_norms,
                             sweep_lambdas, sweep_threads, sweep_out);
        if (plot->parsed()) return cmd_plot(plot_spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
