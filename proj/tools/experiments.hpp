#pragma once

#include <string>

#include "config.hpp"

namespace hybridisc::cli {

struct RunResult {
  std::string csv;
  std::string reports_json;  // empty unless reports were requested
};

/// Runs one experiment. Sweep cells go to at most `threads` workers; rows are
/// emitted in input order.
RunResult run_experiment(const ExperimentConfig& cfg, int threads, bool dump_reports);

}  // namespace hybridisc::cli
