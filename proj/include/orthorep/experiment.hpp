#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthorep/construct.hpp"
#include "orthorep/generators.hpp"
#include "orthorep/graph.hpp"

namespace orthorep {

struct OrderingPlan {
  enum class Kind { Identity, Random, SubsetFirst };
  Kind kind = Kind::Identity;
  int count = 1;            // Random: number of orderings to draw
  std::vector<int> subset;  // SubsetFirst: vertices placed first, ascending
};

// "identity" | "random:K" | "subset-first:v1,v2,..."
OrderingPlan parse_ordering_plan(const std::string& text);
std::string ordering_plan_to_string(const OrderingPlan& plan);

struct ExperimentConfig {
  std::optional<ModelSpec> model;
  std::optional<std::string> graph_file;
  GraphFormat file_format = GraphFormat::EdgeList;
  int dimension = 1;
  Mode mode = Mode::Exact;
  int trials = 1;
  OrderingPlan orderings;
  long long magnitude = kDefaultMagnitude;
  int attempts = kDefaultAttempts;
  std::uint64_t seed = 0;
  double eps = kDefaultTolerance;
  bool store_representations = true;
};

struct TrialOutcome {
  int trial = 0;
  int attempts_used = 0;
  bool gor = false;
  bool or_pass = false;
  bool gp_pass = false;
  bool zero_vector = false;  // some step of the final attempt emitted zero
  double or_margin = 0.0;    // float mode: worst relative inner product
  double gp_margin = 0.0;    // float mode: worst subset sigma_min/sigma_max
  std::optional<std::string> representation_json;
};

struct OrderingOutcome {
  std::vector<int> ordering;
  int trials = 0;
  int successes = 0;
  int or_only = 0;  // orthogonality passed, general position failed
  int zero_incidences = 0;
  double mean_or_margin = 0.0;
  double mean_gp_margin = 0.0;
  double wall_ms = 0.0;
  std::vector<TrialOutcome> trial_results;
};

struct ExperimentResult {
  std::string graph_label;
  int n = 0;
  int dimension = 0;
  Mode mode = Mode::Exact;
  std::uint64_t seed = 0;
  int kappa = 0;
  std::optional<std::vector<int>> no_gor_certificate;
  std::vector<OrderingOutcome> per_ordering;
  int total_trials = 0;
  int total_successes = 0;
};

// Runs construct_with_retries for every (ordering, trial) pair, verifies, and
// aggregates. Trials draw independent sub-seeds of cfg.seed, so the schedule
// never affects results.
ExperimentResult run_experiment(const Graph& g, const ExperimentConfig& cfg,
                                const std::string& label);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// canonical=true omits wall-clock fields so identical (config, seed) runs
// serialize byte-identically.
std::string experiment_to_json(const ExperimentResult& result, bool canonical = false);

}  // namespace orthorep
