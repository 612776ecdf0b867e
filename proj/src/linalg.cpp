#include "orthorep/linalg.hpp"

#include <cmath>

namespace orthorep {
namespace {

// Lexicographic enumeration of k-subsets of {0..n-1}; returns false when the
// current subset is the last one.
bool next_subset(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

template <typename S, typename RankFn>
GeneralPositionResult scan_subsets(const std::vector<std::vector<S>>& vectors, int dimension,
                                   RankFn full_rank) {
  const int n = static_cast<int>(vectors.size());
  if (dimension < 1) throw std::invalid_argument("general_position: dimension must be >= 1");
  if (n < dimension) throw std::invalid_argument("general_position: fewer vectors than dimension");
  std::vector<int> subset(dimension);
  for (int i = 0; i < dimension; ++i) subset[i] = i;
  std::vector<std::vector<S>> cols(dimension);
  do {
    for (int i = 0; i < dimension; ++i) cols[i] = vectors[subset[i]];
    if (!full_rank(cols)) return {false, subset};
  } while (next_subset(subset, n));
  return {true, {}};
}

}  // namespace

int rank(const std::vector<RationalVector>& columns) {
  const int k = static_cast<int>(columns.size());
  if (k == 0) return 0;
  const int dim = static_cast<int>(columns.front().size());
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) != dim) throw std::invalid_argument("rank: dimension mismatch");
  Matrix<Rational> m(dim, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  // Fraction-free elimination with row pivoting, skipping dependent columns.
  Rational prev(1);
  int r = 0;
  for (int c = 0; c < k && r < dim; ++c) {
    int piv = -1;
    for (int i = r; i < dim; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.swap_rows(piv, r);
    for (int i = r + 1; i < dim; ++i) {
      for (int j = c + 1; j < k; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

GeneralPositionResult general_position(const std::vector<RationalVector>& vectors, int dimension) {
  return scan_subsets<Rational>(vectors, dimension, [dimension](const auto& cols) {
    return rank(cols) == dimension;
  });
}

GeneralPositionResult general_position(const std::vector<FloatVector>& vectors, int dimension,
                                       double eps) {
  // Independence is scale-invariant, so the tolerance is applied to
  // unit-normalized columns; otherwise a subset mixing very large and very
  // small vectors would fail the relative cutoff on magnitude alone.
  return scan_subsets<double>(vectors, dimension, [dimension, eps](const auto& cols) {
    return rank(normalized_columns(cols), eps) == dimension;
  });
}

double robust_norm(const FloatVector& v) {
  double biggest = 0.0;
  for (double x : v) biggest = std::max(biggest, std::abs(x));
  if (biggest == 0.0 || !std::isfinite(biggest)) return biggest;
  double sum = 0.0;
  for (double x : v) {
    double t = x / biggest;
    sum += t * t;
  }
  return biggest * std::sqrt(sum);
}

std::vector<FloatVector> normalized_columns(const std::vector<FloatVector>& columns) {
  std::vector<FloatVector> out = columns;
  for (auto& c : out) {
    double norm = robust_norm(c);
    if (norm > 0.0 && std::isfinite(norm))
      for (auto& x : c) x /= norm;
  }
  return out;
}

}  // namespace orthorep
