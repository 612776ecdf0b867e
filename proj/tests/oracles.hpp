#pragma once

// Independent oracles for the test suites. Everything here recomputes results
// by a different route than the library: exhaustive enumeration, cofactor
// expansion, Floyd-Warshall, direct bit packing. Keep it that way.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"
#include "orthorep/linalg.hpp"
#include "orthorep/rng.hpp"

namespace oracles {

using orthorep::Graph;
using orthorep::Matrix;
using orthorep::Rational;
using orthorep::RationalVector;
using orthorep::Rng;
using orthorep::VertexOrdering;

// graph6 encoding written from the format description, independent of the
// library's implementation.
inline std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (size_t c = 0; c < bits.size(); c += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[c + b];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

inline bool connected_after_removal(const Graph& g, const std::vector<int>& removed) {
  return g.component_count_without(removed) <= 1;
}

// Exhaustive vertex-connectivity: the smallest vertex subset whose removal
// disconnects the graph; n-1 for complete graphs. Only for small n.
inline int connectivity_exhaustive(const Graph& g) {
  const int n = g.vertex_count();
  for (int size = 0; size <= n - 2; ++size) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      if (!connected_after_removal(g, subset)) return size;
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return n - 1;
}

// Recursive cofactor expansion along the first row.
inline Rational det_cofactor(const Matrix<Rational>& m) {
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational sum(0);
  for (int j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Matrix<Rational> minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Rational term = m(0, j) * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

inline Matrix<Rational> adjugate_cofactor(const Matrix<Rational>& m) {
  const int n = m.rows();
  Matrix<Rational> adj(n, n);
  if (n == 0) return adj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<Rational> minor(n - 1, n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Rational cof = det_cofactor(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

// Rank as the size of the largest square submatrix with nonzero determinant.
inline int rank_by_minors(const std::vector<RationalVector>& columns) {
  const int k = static_cast<int>(columns.size());
  if (k == 0) return 0;
  const int dim = static_cast<int>(columns.front().size());
  auto combinations = [](int total, int choose) {
    std::vector<std::vector<int>> out;
    std::vector<int> subset(choose);
    for (int i = 0; i < choose; ++i) subset[i] = i;
    while (true) {
      out.push_back(subset);
      int i = choose - 1;
      while (i >= 0 && subset[i] == total - choose + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < choose; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
  };
  for (int size = std::min(dim, k); size >= 1; --size) {
    for (const auto& rows : combinations(dim, size))
      for (const auto& cols : combinations(k, size)) {
        Matrix<Rational> minor(size, size);
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j) minor(i, j) = columns[cols[j]][rows[i]];
        if (det_cofactor(minor) != 0) return size;
      }
  }
  return 0;
}

// Shortest prefix path length by Floyd-Warshall over the subgraph induced by
// the prefix plus the two endpoints; nullopt when unreachable.
inline std::optional<int> prefix_path_length(const Graph& g, const VertexOrdering& order, int p) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  auto allowed = [&](int v) {
    return order.position_of(v) < p || v == order.vertex_at(p) || v == order.vertex_at(p + 1);
  };
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (auto [u, v] : g.edges())
    if (allowed(u) && allowed(v)) dist[u][v] = dist[v][u] = 1;
  for (int m = 0; m < n; ++m) {
    if (!allowed(m) || order.position_of(m) >= p) continue;  // interior vertices only
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        dist[u][v] = std::min(dist[u][v], dist[u][m] + dist[m][v]);
  }
  int d = dist[order.vertex_at(p)][order.vertex_at(p + 1)];
  if (d >= inf) return std::nullopt;
  return d;
}

// Projection of w off the span of independent columns, via a plain Gaussian
// solve of gram * x = V^T w. Requires independent columns.
inline RationalVector project_off_span(const std::vector<RationalVector>& columns,
                                       const RationalVector& w) {
  using orthorep::dot;
  const int k = static_cast<int>(columns.size());
  Matrix<Rational> a = orthorep::gram(columns);
  std::vector<Rational> b(k);
  for (int i = 0; i < k; ++i) b[i] = dot(columns[i], w);
  // forward elimination with exact pivoting
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (a(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("project_off_span: dependent columns");
    a.swap_rows(piv, c);
    std::swap(b[piv], b[c]);
    for (int r = c + 1; r < k; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = c; j < k; ++j) a(r, j) -= f * a(c, j);
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(k);
  for (int r = k - 1; r >= 0; --r) {
    Rational s = b[r];
    for (int j = r + 1; j < k; ++j) s -= a(r, j) * x[j];
    x[r] = s / a(r, r);
  }
  RationalVector out = w;
  for (int j = 0; j < k; ++j)
    for (size_t i = 0; i < w.size(); ++i) out[i] -= x[j] * columns[j][i];
  return out;
}

inline VertexOrdering random_ordering(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int v = n - 1; v > 0; --v) std::swap(perm[v], perm[rng.uniform_int(0, v)]);
  return VertexOrdering(std::move(perm));
}

inline Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline RationalVector rational_vec(std::vector<long long> entries) {
  RationalVector v;
  for (long long e : entries) v.emplace_back(e);
  return v;
}

}  // namespace oracles
