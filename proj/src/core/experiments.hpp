#pragma once

#include <string>
#include <vector>

#include "common.hpp"
#include "graph.hpp"

namespace mstlab {

inline constexpr double kZeta3 = 1.2020569031595942854;

// Flat key=value configuration mirroring the CLI flags. A base seed is
// mandatory; trial seeds derive from (seed, trial index).
struct ExperimentConfig {
  std::string command;
  std::vector<int> n_values;
  int trials = 0;      // 0 -> per-command default
  u64 seed = 0;
  bool has_seed = false;
  std::string dist = "uniform";
  double epsilon = 0.2;
  std::string start = "path";
  double p = 0.0;           // 0 -> 1/n + n^{-11/10}
  double w_threshold = 0.0; // 0 -> rho*/log n
  int run_length = 0;       // 0 -> max(2, floor(log log n))
  std::string out_csv;
  std::string out_json;

  bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);
// Lossless round-trip: parse_config_text(config_to_text(c)) == c.
std::string config_to_text(const ExperimentConfig& c);

// One row per trial for the per-trial commands; each command measures a
// subset of the scalars. runtime_ms feeds the summary only, never the CSV.
struct TrialRecord {
  int trial = 0;
  u64 seed = 0;
  int n = 0;
  double mst_weight = 0.0;
  double wdiam = 0.0;
  double wt_max = 0.0;
  int heavy_count = 0;
  int i_value = 0;
  bool reached_mst = false;
  double runtime_ms = 0.0;
};

struct CommandResult {
  std::string csv;
  std::string json;
};

// Runs one command deterministically; the CSV text depends only on the
// config. The JSON summary adds wall clock and build info on top of the
// aggregates.
CommandResult run_command(const ExperimentConfig& cfg);

const std::vector<std::string>& command_names();

}  // namespace mstlab
