#pragma once

#include <cstdlib>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "orthorep/rational.hpp"

namespace orthorep {

// Dense row-major matrix over an exact rational or double scalar. Only the
// operations the representation pipeline needs; this is not a general linear
// algebra library.
template <typename S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (a == S(0)) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<S> data_;
};

template <typename S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  S sum(0);
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// k x k matrix of pairwise inner products of the given columns. Empty input
// gives the 0x0 matrix.
template <typename S>
Matrix<S> gram(const std::vector<std::vector<S>>& columns) {
  const int k = static_cast<int>(columns.size());
  if (k == 0) return Matrix<S>(0, 0);
  for (const auto& c : columns)
    if (c.size() != columns.front().size()) throw std::invalid_argument("gram: dimension mismatch");
  Matrix<S> m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      S v = dot(columns[i], columns[j]);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

namespace detail {

// Pivot choice: first nonzero entry for exact scalars (deterministic, exact
// division regardless), largest magnitude for doubles.
template <typename S>
int pick_pivot(const Matrix<S>& m, int from_row, int col) {
  if constexpr (std::is_floating_point_v<S>) {
    int best = -1;
    S best_abs(0);
    for (int r = from_row; r < m.rows(); ++r) {
      S a = m(r, col) < S(0) ? -m(r, col) : m(r, col);
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    return best;
  } else {
    for (int r = from_row; r < m.rows(); ++r)
      if (m(r, col) != S(0)) return r;
    return -1;
  }
}

}  // namespace detail

// Determinant by Bareiss fraction-free elimination. det of the 0x0 matrix is 1.
template <typename S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square input");
  const int n = m.rows();
  if (n == 0) return S(1);
  S prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = detail::pick_pivot(m, k, k);
    if (piv < 0) return S(0);
    if (piv != k) {
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Adjugate by the Faddeev-LeVerrier recurrence: M_k = A*M_{k-1} + c_k*I with
// c_k = -tr(A*M_k)/k, adj(A) = (-1)^(n-1) * M_n. Valid for singular input,
// which the complement map depends on. adj of the 0x0 matrix is 0x0; of any
// 1x1 matrix, [[1]].
template <typename S>
Matrix<S> adjugate(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: non-square input");
  const int n = m.rows();
  if (n == 0) return Matrix<S>(0, 0);
  Matrix<S> mk(n, n);  // M_0 = 0
  S c(1);              // c_n = 1
  for (int k = 1; k <= n; ++k) {
    Matrix<S> next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c;
    mk = std::move(next);
    c = -(m * mk).trace() / S(k);
  }
  if (n % 2 == 0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mk(i, j) = -mk(i, j);
  return mk;
}

// Exact matrix rank of the given columns by fraction-free elimination.
int rank(const std::vector<RationalVector>& columns);

// Float rank: number of singular values above eps times the largest.
int rank(const std::vector<FloatVector>& columns, double eps);

// The determinant-based map onto the orthogonal complement:
//
//   v = det(G) * w - V * adj(G) * V^T * w,   G = gram(preceding)
//
// v is orthogonal to every preceding vector for all inputs (G*adj(G) =
// det(G)*I). When the preceding vectors are dependent or span the whole
// space, v = 0; when they are independent, v = det(G) * (projection of w onto
// the complement), so the image over all w is exactly that complement.
// k = 0 returns w unchanged.
template <typename S>
std::vector<S> complement_map(const std::vector<std::vector<S>>& preceding,
                              const std::vector<S>& w) {
  const size_t dim = w.size();
  for (const auto& c : preceding)
    if (c.size() != dim) throw std::invalid_argument("complement_map: dimension mismatch");
  const size_t k = preceding.size();
  if (k == 0) return w;
  Matrix<S> g = gram(preceding);
  S det_g = determinant(g);
  Matrix<S> adj_g = adjugate(g);
  std::vector<S> vtw(k, S(0));
  for (size_t j = 0; j < k; ++j) vtw[j] = dot(preceding[j], w);
  std::vector<S> u(k, S(0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      u[i] += adj_g(static_cast<int>(i), static_cast<int>(j)) * vtw[j];
  std::vector<S> v(dim, S(0));
  for (size_t i = 0; i < dim; ++i) {
    v[i] = det_g * w[i];
    for (size_t j = 0; j < k; ++j) v[i] -= preceding[j][i] * u[j];
  }
  return v;
}

struct GeneralPositionResult {
  bool ok = false;
  // Lexicographically first D-subset of indices whose vectors are dependent;
  // empty when ok.
  std::vector<int> failing_subset;
};

GeneralPositionResult general_position(const std::vector<RationalVector>& vectors, int dimension);
GeneralPositionResult general_position(const std::vector<FloatVector>& vectors, int dimension,
                                       double eps);

// Euclidean norm computed against the largest |entry| so it stays finite even
// when the squared norm would overflow.
double robust_norm(const FloatVector& v);

// Unit-normalized copies of the columns; zero and non-finite columns are
// returned unchanged. Used wherever a scale-invariant predicate meets the
// relative float tolerance.
std::vector<FloatVector> normalized_columns(const std::vector<FloatVector>& columns);

// Orthonormal basis (within eps) of the orthogonal complement of the span of
// `preceding` in R^dim; size is dim - rank(preceding). Float-only: exact mode
// cannot normalize.
std::vector<FloatVector> orthonormal_complement_basis(const std::vector<FloatVector>& preceding,
                                                      int dim, double eps);

// Singular values of the dim x k matrix whose columns are the given vectors,
// descending. Used for trace margins in float mode.
std::vector<double> singular_values(const std::vector<FloatVector>& columns, int dim);

}  // namespace orthorep
