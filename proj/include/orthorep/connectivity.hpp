#pragma once

#include <optional>
#include <vector>

#include "orthorep/graph.hpp"

namespace orthorep {

// Vertex connectivity with a witness: a minimum vertex cut when one exists
// (kappa < n-1), or the complete-graph marker. Disconnected graphs report
// kappa 0 with the empty cut.
struct ConnectivityCertificate {
  int kappa = 0;
  bool complete = false;
  std::vector<int> cut;  // meaningful when !complete; sorted ascending
};

ConnectivityCertificate vertex_connectivity(const Graph& g);

// yes iff kappa(g) >= k. On no, `cut` is a vertex cut of size < k (empty when
// g is disconnected); absent only for complete graphs, which have no cut.
struct KConnectivityCheck {
  bool ok = false;
  std::optional<std::vector<int>> cut;
};

KConnectivityCheck is_k_connected(const Graph& g, int k);

// Minimum number of internally disjoint paths between two non-adjacent
// vertices, plus a minimum separating vertex set.
struct PairConnectivity {
  int value = 0;
  std::vector<int> cut;
};

PairConnectivity pair_connectivity(const Graph& g, int s, int t);

}  // namespace orthorep
