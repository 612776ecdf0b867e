#include "orthorep/lemmas.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "orthorep/connectivity.hpp"
#include "orthorep/ordering.hpp"
#include "orthorep/rng.hpp"

namespace orthorep {

using nlohmann::json;

namespace {

VertexOrdering random_ordering(int n, Rng& rng) {
  return VertexOrdering(random_permutation(n, rng));
}

}  // namespace

LemmasReport run_lemma_checks(const Graph& g, int dimension, std::uint64_t seed, int cases) {
  const int n = g.vertex_count();
  if (dimension < 1 || dimension > n)
    throw std::invalid_argument("lemma checks: need 1 <= D <= n");
  if (cases < 1) throw std::invalid_argument("lemma checks: cases must be >= 1");
  LemmasReport report;
  report.hypothesis_holds = is_k_connected(g, n - dimension).ok;

  // Adjacent edge swaps must not change the constraint signature.
  Rng swap_rng(derive_seed(seed, 1));
  for (int c = 0; c < cases; ++c) {
    VertexOrdering order = random_ordering(n, swap_rng);
    std::vector<int> edge_positions;
    for (int p = 0; p + 1 < n; ++p)
      if (g.adjacent(order.vertex_at(p), order.vertex_at(p + 1))) edge_positions.push_back(p);
    if (edge_positions.empty()) continue;
    int p = edge_positions[swap_rng.uniform_int(0, static_cast<long long>(edge_positions.size()) - 1)];
    report.swap_cases += 1;
    SwapInvariance inv = edge_swap_invariance(g, order, p);
    if (inv.status == SwapStatus::Invariant)
      report.swap_invariant += 1;
    else
      report.violations.push_back("signature differs after edge swap at position " +
                                  std::to_string(p));
  }

  // Every position past the dimension prefix must see a prefix path, as long
  // as the connectivity hypothesis holds.
  Rng path_rng(derive_seed(seed, 2));
  for (int c = 0; c < cases; ++c) {
    VertexOrdering order = random_ordering(n, path_rng);
    for (int p = dimension - 1; p + 1 < n; ++p) {
      if (p < 0) continue;
      report.path_positions += 1;
      if (path_within_prefix(g, order, p)) {
        report.path_found += 1;
      } else {
        report.path_missing += 1;
        if (report.hypothesis_holds)
          report.violations.push_back("no prefix path at position " + std::to_string(p) +
                                      " despite the connectivity hypothesis");
      }
    }
  }

  // Exchange rewriting: 1 or 5 validated steps ending at the transposition.
  Rng ex_rng(derive_seed(seed, 3));
  for (int c = 0; c < cases; ++c) {
    if (dimension - 1 > n - 2) break;  // no admissible position
    VertexOrdering order = random_ordering(n, ex_rng);
    int p = static_cast<int>(ex_rng.uniform_int(std::max(0, dimension - 1), n - 2));
    report.exchange_cases += 1;
    try {
      std::vector<ExchangeStep> steps = exchange_sequence(g, order, p, dimension);
      if (steps.size() == 1)
        report.exchange_single_step += 1;
      else if (steps.size() == 5)
        report.exchange_five_step += 1;
      else
        report.violations.push_back("exchange sequence of unexpected length " +
                                    std::to_string(steps.size()));
    } catch (const NoPrefixPath&) {
      report.exchange_skipped += 1;
      if (report.hypothesis_holds)
        report.violations.push_back("exchange sequence found no prefix path at position " +
                                    std::to_string(p) + " despite the connectivity hypothesis");
    } catch (const std::logic_error& e) {
      report.violations.push_back(std::string("exchange sequence defect: ") + e.what());
    }
  }
  return report;
}

std::string lemmas_to_json(const LemmasReport& report) {
  json doc;
  doc["hypothesis_holds"] = report.hypothesis_holds;
  doc["edge_swap"] = {{"cases", report.swap_cases}, {"invariant", report.swap_invariant}};
  doc["prefix_paths"] = {{"positions", report.path_positions},
                         {"found", report.path_found},
                         {"missing", report.path_missing}};
  doc["exchange"] = {{"cases", report.exchange_cases},
                     {"single_step", report.exchange_single_step},
                     {"five_step", report.exchange_five_step},
                     {"skipped", report.exchange_skipped}};
  doc["violations"] = report.violations;
  doc["ok"] = report.ok();
  return doc.dump(2) + "\n";
}

}  // namespace orthorep
