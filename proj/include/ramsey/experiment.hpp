#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/orchestrator.hpp"
#include "ramsey/stats.hpp"
#include "ramsey/strategies.hpp"

namespace ramsey {

struct ExperimentConfig {
  ParameterSet params;
  // Pattern source: a graph file path, or random cubic graphs of this size.
  std::string pattern_file;  // empty: use random_cubic_n
  Vertex random_cubic_n = 30;
  ColouringStrategy strategy = ColouringStrategy::uniform_random;
  double bias = 0.5;
  int trials = 1;
  std::uint64_t seed = 1;
  std::string output_dir;  // empty: no files written
  RamseyEmbedOptions embed;
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string strategy;
  bool success = false;
  std::string colour;
  std::string case_taken;
  std::string final_stage;
  double runtime_seconds = 0.0;
  std::size_t base_edges = 0;
  std::size_t gamma_edges = 0;
};

struct ExperimentReport {
  std::vector<TrialRow> rows;
  int successes = 0;
  double success_rate = 0.0;
  std::string csv;            // fixed column order, one row per trial
  std::string aggregate_json;
};

// Per trial: colour the (shared) host, embed the pattern, validate, record.
// Identical (config, seed) produce byte-identical reports.
ExperimentReport run_experiment(const ExperimentConfig& config);

enum class CouplingKind { block, biclique, layer_union };

struct CouplingReport {
  CouplingKind kind;
  std::uint64_t trials = 0;
  double expected_marginal = 0.0;   // p~/p or p~'/p'
  double observed_marginal = 0.0;
  double marginal_z = 0.0;          // observed deviation in sigmas
  ChiSquareResult outcome_chi2;     // per-unit edge-subset law
  std::uint64_t containment_violations = 0;  // layer_union only
};

// Statistical checks of the subsampling laws: per-edge conditional marginals,
// the per-unit outcome distribution against the independent law, and (for the
// layer union) the L inside F containment.
CouplingReport coupling_marginal_test(CouplingKind kind, int c_block_size, double p,
                                      std::uint64_t trials, std::uint64_t seed);

}  // namespace ramsey
