#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gclust/engine.hpp"

namespace gclust {

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

// Everything a report carries except the accumulator (dump Q/R separately
// as CSV when needed) and the wall clock on re-parse.
nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

bool write_report(const RunReport& report, const std::string& path);
RunReport read_report(const std::string& path);

// Sweep tables: "norm_mode,tau,L_found,ari,success" resp.
// "lambda,L_found,ari,success".
void write_tau_sweep_csv(const TauSweepTable& table, std::ostream& out);
void write_lambda_sweep_csv(const LambdaSweepTable& table, std::ostream& out);

// Per-function rows: "k,mu0,...,mu{D-1},label".
void write_assignments_csv(const RunReport& report, std::ostream& out);

}  // namespace gclust
