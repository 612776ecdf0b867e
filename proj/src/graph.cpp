#include "orthorep/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace orthorep {

GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list" || name == "el") return GraphFormat::EdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  throw ParseError("unknown graph format: " + name);
}

std::string format_name(GraphFormat f) {
  return f == GraphFormat::EdgeList ? "edge-list" : "graph6";
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw ParseError("graph must have at least one vertex");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  neighbors_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex index out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

bool Graph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

int Graph::component_count_without(const std::vector<int>& removed) const {
  std::vector<char> gone(n_, 0);
  for (int v : removed) gone[v] = 1;
  std::vector<char> visited(n_, 0);
  int components = 0;
  for (int s = 0; s < n_; ++s) {
    if (gone[s] || visited[s]) continue;
    ++components;
    std::deque<int> queue{s};
    visited[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : neighbors_[v]) {
        if (!gone[w] && !visited[w]) {
          visited[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return components;
}

VertexOrdering::VertexOrdering(std::vector<int> positions) : positions_(std::move(positions)) {
  const int n = static_cast<int>(positions_.size());
  inverse_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = positions_[p];
    if (v < 0 || v >= n || inverse_[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of 0..n-1");
    inverse_[v] = p;
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return VertexOrdering(std::move(p));
}

VertexOrdering VertexOrdering::with_swapped(int a, int b) const {
  std::vector<int> p = positions_;
  std::swap(p.at(a), p.at(b));
  return VertexOrdering(std::move(p));
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip trailing CR and surrounding spaces
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::istringstream ls(line.substr(start));
    if (n < 0) {
      if (!(ls >> n) || !(ls >> std::ws).eof() || n < 1)
        throw ParseError("line " + std::to_string(lineno) + ": expected vertex count >= 1");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v) || !(ls >> std::ws).eof())
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("empty edge-list input");
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw ParseError("empty graph6 input");
  int n = s[0] - 63;
  if (s[0] == '~') throw ParseError("graph6: only graphs with n <= 62 are supported");
  if (n < 1 || n > 62) throw ParseError("graph6: bad vertex count byte");
  const int bits = n * (n - 1) / 2;
  const int chunk_count = (bits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + chunk_count)
    throw ParseError("graph6: wrong length for n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      int c = s[1 + t / 6] - 63;
      if (c < 0 || c > 63) throw ParseError("graph6: byte out of range");
      if ((c >> (5 - t % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  for (int u = bits; u < chunk_count * 6; ++u) {
    int c = s[1 + u / 6] - 63;
    if ((c >> (5 - u % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw ParseError("graph6: only graphs with n <= 62 are supported");
  std::string out(1, static_cast<char>(63 + n));
  const int bits = n * (n - 1) / 2;
  std::vector<int> chunk((bits + 5) / 6, 0);
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.adjacent(i, j)) chunk[t / 6] |= 1 << (5 - t % 6);
  for (int c : chunk) out.push_back(static_cast<char>(63 + c));
  return out;
}

std::vector<int> preceding_non_neighbors(const Graph& g, const VertexOrdering& order, int p) {
  if (p < 0 || p >= order.size()) throw std::invalid_argument("position out of range");
  const int v = order.vertex_at(p);
  std::vector<int> result;
  for (int q = 0; q < p; ++q) {
    int u = order.vertex_at(q);
    if (!g.adjacent(u, v)) result.push_back(u);
  }
  return result;
}

std::optional<std::vector<int>> path_within_prefix(const Graph& g, const VertexOrdering& order,
                                                   int p) {
  const int n = order.size();
  if (p < 0 || p + 1 >= n) throw std::invalid_argument("position out of range");
  const int from = order.vertex_at(p);
  const int to = order.vertex_at(p + 1);
  if (g.adjacent(from, to)) return std::vector<int>{from, to};
  // BFS from `from`; only vertices at positions < p may be expanded.
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (parent[w] != -1) continue;
      parent[w] = v;
      if (w == to) {
        std::vector<int> path{to};
        for (int x = v; x != from; x = parent[x]) path.push_back(x);
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (order.position_of(w) < p) queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace orthorep
