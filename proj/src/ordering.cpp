#include "orthorep/ordering.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace orthorep {

using nlohmann::json;

ConstraintSignature constraint_signature(const Graph& g, const VertexOrdering& order) {
  const int n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("ordering size does not match graph");
  ConstraintSignature sig(n);
  for (int p = 0; p < n; ++p) {
    std::vector<int> pnn = preceding_non_neighbors(g, order, p);
    std::sort(pnn.begin(), pnn.end());
    sig[order.vertex_at(p)] = std::move(pnn);
  }
  return sig;
}

SwapInvariance edge_swap_invariance(const Graph& g, const VertexOrdering& order, int p) {
  if (p < 0 || p + 1 >= order.size()) throw std::invalid_argument("position out of range");
  const int a = order.vertex_at(p);
  const int b = order.vertex_at(p + 1);
  if (!g.adjacent(a, b)) return {SwapStatus::NotAnEdge, {}};
  ConstraintSignature before = constraint_signature(g, order);
  ConstraintSignature after = constraint_signature(g, order.with_swapped(p, p + 1));
  SwapInvariance result;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (before[v] != after[v]) result.differences.push_back({v, before[v], after[v]});
  result.status = result.differences.empty() ? SwapStatus::Invariant : SwapStatus::SignatureDiffers;
  return result;
}

std::string tag_name(ExchangeTag tag) {
  switch (tag) {
    case ExchangeTag::EarlyRearrangement:
      return "early-rearrangement";
    case ExchangeTag::InnerInduction:
      return "inner-induction";
    case ExchangeTag::EdgeBaseCase:
      return "edge-base-case";
  }
  return "?";
}

namespace {

int interior_count(const std::vector<int>& path) { return static_cast<int>(path.size()) - 2; }

}  // namespace

void validate_exchange_sequence(const Graph& g, const VertexOrdering& start,
                                const std::vector<ExchangeStep>& steps, int p) {
  const VertexOrdering* prev = &start;
  for (const auto& step : steps) {
    if (step.result != prev->with_swapped(step.pos_a, step.pos_b))
      throw std::logic_error("exchange step does not match its stated swap");
    switch (step.tag) {
      case ExchangeTag::EarlyRearrangement:
        if (step.pos_a > p || step.pos_b > p || step.pos_a == step.pos_b)
          throw std::logic_error("early rearrangement outside the first p+1 positions");
        break;
      case ExchangeTag::EdgeBaseCase: {
        if (step.pos_b != step.pos_a + 1)
          throw std::logic_error("edge base case must swap consecutive positions");
        if (!g.adjacent(prev->vertex_at(step.pos_a), prev->vertex_at(step.pos_b)))
          throw std::logic_error("edge base case swaps a non-edge");
        break;
      }
      case ExchangeTag::InnerInduction: {
        if (step.pos_b != step.pos_a + 1)
          throw std::logic_error("inner induction must swap consecutive positions");
        auto path = path_within_prefix(g, *prev, step.pos_a);
        if (!path || interior_count(*path) > step.inner_interior)
          throw std::logic_error("inner induction has no prefix path within its bound");
        break;
      }
    }
    prev = &step.result;
  }
}

std::vector<ExchangeStep> exchange_sequence(const Graph& g, const VertexOrdering& order, int p,
                                            int dimension) {
  const int n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("ordering size does not match graph");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (p < dimension - 1)
    throw std::invalid_argument("exchange_sequence: position must be >= D-1");
  if (p + 1 >= n) throw std::invalid_argument("exchange_sequence: position out of range");
  auto path = path_within_prefix(g, order, p);
  if (!path)
    throw NoPrefixPath("no path inside the placed prefix between positions " +
                       std::to_string(p) + " and " + std::to_string(p + 1));
  std::vector<ExchangeStep> steps;
  if (path->size() == 2) {
    steps.push_back({order.with_swapped(p, p + 1), ExchangeTag::EdgeBaseCase, p, p + 1, -1});
  } else {
    const int j1 = order.position_of((*path)[1]);
    const int shorter = interior_count(*path) - 1;  // tail path drops one interior vertex
    VertexOrdering current = order.with_swapped(j1, p);
    steps.push_back({current, ExchangeTag::EarlyRearrangement, j1, p, -1});
    current = current.with_swapped(p, p + 1);
    steps.push_back({current, ExchangeTag::InnerInduction, p, p + 1, shorter});
    current = current.with_swapped(j1, p);
    steps.push_back({current, ExchangeTag::EarlyRearrangement, j1, p, -1});
    current = current.with_swapped(p, p + 1);
    steps.push_back({current, ExchangeTag::EdgeBaseCase, p, p + 1, -1});
    current = current.with_swapped(j1, p);
    steps.push_back({current, ExchangeTag::EarlyRearrangement, j1, p, -1});
  }
  validate_exchange_sequence(g, order, steps, p);
  if (!(steps.back().result == order.with_swapped(p, p + 1)))
    throw std::logic_error("exchange sequence does not end at the transposed ordering");
  return steps;
}

std::pair<VertexOrdering, VertexOrdering> reduce_to_adjacent_transposition(
    const VertexOrdering& sigma, const VertexOrdering& tau, int p) {
  const int n = sigma.size();
  if (tau.size() != n) throw std::invalid_argument("orderings have different sizes");
  if (p < 0 || p + 1 >= n) throw std::invalid_argument("position out of range");
  for (int j = p + 2; j < n; ++j)
    if (sigma.vertex_at(j) != tau.vertex_at(j))
      throw std::invalid_argument("orderings must agree after position p+1");
  std::vector<int> sp(sigma.positions().begin(), sigma.positions().begin() + p + 2);
  std::vector<int> tp(tau.positions().begin(), tau.positions().begin() + p + 2);
  std::sort(sp.begin(), sp.end());
  std::sort(tp.begin(), tp.end());
  if (sp != tp)
    throw std::invalid_argument("orderings must share their first p+2 vertices as a set");

  const int s = sigma.vertex_at(p + 1);
  const int t = tau.vertex_at(p + 1);
  std::vector<int> head;
  head.reserve(n);
  if (s == t) {
    // Degenerate: after aligning tau's prefix with sigma's, the two agree.
    return {sigma, sigma};
  }
  const int k0 = sigma.position_of(t);  // <= p by the set precondition
  for (int j = 0; j <= p; ++j)
    if (j != k0) head.push_back(sigma.vertex_at(j));
  std::vector<int> sig_prime = head;
  sig_prime.push_back(t);
  sig_prime.push_back(s);
  std::vector<int> tau_prime = head;
  tau_prime.push_back(s);
  tau_prime.push_back(t);
  for (int j = p + 2; j < n; ++j) {
    sig_prime.push_back(sigma.vertex_at(j));
    tau_prime.push_back(sigma.vertex_at(j));
  }
  return {VertexOrdering(std::move(sig_prime)), VertexOrdering(std::move(tau_prime))};
}

std::string exchange_sequence_to_json(const std::vector<ExchangeStep>& steps) {
  json arr = json::array();
  for (const auto& s : steps) {
    json step;
    step["ordering"] = s.result.positions();
    step["tag"] = tag_name(s.tag);
    step["swap"] = {s.pos_a, s.pos_b};
    if (s.tag == ExchangeTag::InnerInduction) step["interior_bound"] = s.inner_interior;
    arr.push_back(std::move(step));
  }
  return arr.dump(2) + "\n";
}

}  // namespace orthorep
