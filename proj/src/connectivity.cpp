#include "orthorep/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace orthorep {
namespace {

// Dinic on a unit-capacity-style network; small n, no scaling needed.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes), level_(nodes), iter_(nodes) {}

  void add_edge(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    head_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }

  // Nodes reachable from s in the residual network of the last max_flow run.
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int id : head_[v]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          queue.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int id : head_[v]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(head_[v].size()); ++i) {
      int id = head_[v][i];
      Edge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
        if (int pushed = dfs(e.to, t, std::min(limit, e.cap))) {
          e.cap -= pushed;
          edges_[id ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

PairConnectivity pair_connectivity(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  if (s == t || s < 0 || t < 0 || s >= n || t >= n)
    throw std::invalid_argument("pair_connectivity needs two distinct vertices");
  if (g.adjacent(s, t))
    throw std::invalid_argument("pair_connectivity is defined for non-adjacent pairs");
  // Split each vertex v into in(v)=2v -> out(v)=2v+1 with capacity 1; the
  // endpoints get effectively infinite internal capacity.
  const int big = n;
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_edge(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (auto [u, v] : g.edges()) {
    net.add_edge(2 * u + 1, 2 * v, big);
    net.add_edge(2 * v + 1, 2 * u, big);
  }
  PairConnectivity result;
  result.value = net.max_flow(2 * s + 1, 2 * t);
  std::vector<char> reach = net.residual_reachable(2 * s + 1);
  for (int v = 0; v < n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) result.cut.push_back(v);
  return result;
}

ConnectivityCertificate vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (g.is_complete()) return {n - 1, true, {}};
  // kappa = min over s-t connectivities of one fixed vertex v0 against its
  // non-neighbors, and between non-adjacent pairs of its neighbors: every
  // minimum cut either misses v0 (separating it from some non-neighbor) or
  // contains it (separating two of its neighbors).
  int v0 = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(v0)) v0 = v;
  ConnectivityCertificate best;
  best.kappa = n;  // above any possible cut size
  auto consider = [&](int s, int t) {
    PairConnectivity pc = pair_connectivity(g, s, t);
    if (pc.value < best.kappa) best = {pc.value, false, std::move(pc.cut)};
  };
  for (int u = 0; u < n && best.kappa > 0; ++u)
    if (u != v0 && !g.adjacent(v0, u)) consider(v0, u);
  const auto& nb = g.neighbors(v0);
  for (size_t i = 0; i < nb.size() && best.kappa > 0; ++i)
    for (size_t j = i + 1; j < nb.size() && best.kappa > 0; ++j)
      if (!g.adjacent(nb[i], nb[j])) consider(nb[i], nb[j]);
  return best;
}

KConnectivityCheck is_k_connected(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k == 0) return {true, std::nullopt};
  ConnectivityCertificate cert = vertex_connectivity(g);
  if (cert.kappa >= k) return {true, std::nullopt};
  if (cert.complete) return {false, std::nullopt};  // K_n has no vertex cut
  return {false, std::move(cert.cut)};
}

}  // namespace orthorep
