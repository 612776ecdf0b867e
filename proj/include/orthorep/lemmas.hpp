#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"

namespace orthorep {

// Batch checks of the ordering combinatorics over randomized orderings of one
// graph: signature invariance under adjacent edge swaps, prefix-path
// existence at every position past the dimension prefix, and exchange-
// sequence rewriting. Any violation is a defect (or a connectivity
// counterexample) and is listed verbatim.
struct LemmasReport {
  bool hypothesis_holds = false;  // kappa >= n - D
  int swap_cases = 0;
  int swap_invariant = 0;
  int path_positions = 0;
  int path_found = 0;
  int path_missing = 0;  // allowed only when the hypothesis fails
  int exchange_cases = 0;
  int exchange_single_step = 0;
  int exchange_five_step = 0;
  int exchange_skipped = 0;  // no prefix path, hypothesis failed
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

LemmasReport run_lemma_checks(const Graph& g, int dimension, std::uint64_t seed, int cases);

std::string lemmas_to_json(const LemmasReport& report);

}  // namespace orthorep
