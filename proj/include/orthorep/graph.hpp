#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthorep {

// Input/validation problems (malformed files, bad indices) throw ParseError so
// the CLI can map them to its input-error exit code.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class GraphFormat { EdgeList, Graph6 };

GraphFormat parse_format(const std::string& name);
std::string format_name(GraphFormat f);

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// no self-loops, no duplicate edges.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_complete() const;

  // Subgraph induced by deleting the given vertices, on the same labels
  // conceptually; returns component count of what remains (used to validate
  // cut certificates). Deleted list may be empty.
  int component_count_without(const std::vector<int>& removed) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<int>> neighbors_;
};

// A permutation of 0..n-1; position p holds the vertex placed (p+1)-th.
class VertexOrdering {
 public:
  explicit VertexOrdering(std::vector<int> positions);
  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(positions_.size()); }
  int vertex_at(int position) const { return positions_[position]; }
  int position_of(int vertex) const { return inverse_[vertex]; }
  const std::vector<int>& positions() const { return positions_; }

  // New ordering with the entries at positions a and b exchanged.
  VertexOrdering with_swapped(int a, int b) const;

  bool operator==(const VertexOrdering& o) const { return positions_ == o.positions_; }

 private:
  std::vector<int> positions_;
  std::vector<int> inverse_;
};

Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6, header-free form for n <= 62: byte n+63, then the upper-triangle
// adjacency bits in column-major order packed big-endian into 6-bit chunks,
// each offset by 63.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Vertices at positions < p that are non-adjacent to the vertex at position p,
// in position order. These generate the orthogonality constraints at step p.
std::vector<int> preceding_non_neighbors(const Graph& g, const VertexOrdering& order, int p);

// Shortest path between the vertices at positions p and p+1 whose interior
// vertices all occupy positions < p; nullopt if none exists. BFS scans
// neighbors in ascending vertex index, so ties break deterministically.
std::optional<std::vector<int>> path_within_prefix(const Graph& g, const VertexOrdering& order,
                                                   int p);

}  // namespace orthorep
