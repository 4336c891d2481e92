#pragma once

#include <cstddef>
#include <vector>

#include "algtool/error.hpp"
#include "algtool/parallel.hpp"
#include "algtool/poly.hpp"

namespace algtool {

/// Row-major matrix of polynomials over one common ring.
template <class S>
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const Ring& ring, const Field<S>& field = {})
      : rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly<S>(ring, field)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::kRange, "matrix dimensions must be positive");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return entries_.front().ring(); }
  const Field<S>& field() const { return entries_.front().field(); }

  const MultiPoly<S>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, MultiPoly<S> f) {
    entries_.front().check_compatible(f);
    entries_[i * cols_ + j] = std::move(f);
  }
  const std::vector<MultiPoly<S>>& entries() const { return entries_; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    PolyMatrix m(rs.size(), cs.size(), ring(), field());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) m.entries_[i * cs.size() + j] = at(rs[i], cs[j]);
    }
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!(at(i, j) == at(j, i))) return false;
      }
    }
    return true;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly<S>> entries_;
};

/// Laplace expansion along rows, memoised over column subsets (2^n states).
template <class S>
MultiPoly<S> det_cofactor(const PolyMatrix<S>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  // minors[mask] = det of rows 0..|mask|-1 restricted to the columns in mask.
  std::vector<MultiPoly<S>> minors(std::size_t{1} << n, MultiPoly<S>(m.ring(), m.field()));
  minors[0] = MultiPoly<S>::constant(m.ring(), m.field(), m.field().one());
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    MultiPoly<S> acc(m.ring(), m.field());
    int sign = 1;  // expansion along the last row: the highest column carries +
    for (std::size_t j = n; j-- > 0;) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const auto& sub = minors[mask & ~(std::size_t{1} << j)];
      if (!sub.is_zero() && !m.at(row, j).is_zero()) {
        auto t = m.at(row, j) * sub;
        if (sign > 0) acc += t; else acc -= t;
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

/// Fraction-free Bareiss elimination; every division is exact.
template <class S>
MultiPoly<S> det_bareiss(const PolyMatrix<S>& m) {
  static_assert(Field<S>::kExact, "Bareiss elimination needs exact division");
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  std::vector<MultiPoly<S>> a = m.entries();
  auto at = [&](std::size_t i, std::size_t j) -> MultiPoly<S>& { return a[i * n + j]; };
  auto prev = MultiPoly<S>::constant(m.ring(), m.field(), m.field().one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && at(r, k).is_zero()) ++r;
      if (r == n) return MultiPoly<S>(m.ring(), m.field());
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw Error(ErrorCode::kInternal, "Bareiss division was not exact");
        at(i, j) = std::move(*q);
      }
      at(i, k) = MultiPoly<S>(m.ring(), m.field());
    }
    prev = at(k, k);
  }
  auto d = at(n - 1, n - 1);
  return negate ? -d : d;
}

/// Exact determinant for sizes up to 8: cofactor expansion through 5×5,
/// Bareiss beyond for exact fields.
template <class S>
MultiPoly<S> mat_det(const PolyMatrix<S>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  if (m.rows() > 8) throw Error(ErrorCode::kRange, "determinants are limited to size 8");
  if constexpr (Field<S>::kExact) {
    if (m.rows() > 5) return det_bareiss(m);
  }
  return det_cofactor(m);
}

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

/// All k×k minors, row subset major then column subset, both lexicographic.
template <class S>
std::vector<MultiPoly<S>> mat_minors(const PolyMatrix<S>& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) {
    throw Error(ErrorCode::kRange, "minor size " + std::to_string(k) + " out of range");
  }
  const auto rsets = k_subsets(m.rows(), k);
  const auto csets = k_subsets(m.cols(), k);
  return parallel_map(rsets.size() * csets.size(), [&](std::size_t idx) {
    return mat_det(m.submatrix(rsets[idx / csets.size()], csets[idx % csets.size()]));
  });
}

/// Sylvester matrix of f, g in `var`: deg_g rows of f-coefficients first.
template <class S>
PolyMatrix<S> sylvester_matrix(const MultiPoly<S>& f, const MultiPoly<S>& g, std::size_t var) {
  f.check_compatible(g);
  if (var >= f.num_vars()) throw Error(ErrorCode::kRange, "resultant variable out of range");
  const int m = f.degree_in(var);
  const int n = g.degree_in(var);
  if (m < 1 || n < 1) throw Error(ErrorCode::kRange, "resultant inputs must have positive degree in the variable");
  const std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix<S> s(size, size, f.ring(), f.field());
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s.set(r, r + k, coefficient_in(f, var, m - k));
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s.set(n + r, r + k, coefficient_in(g, var, n - k));
  }
  return s;
}

/// det of the Sylvester matrix; the result does not involve `var`.
template <class S>
MultiPoly<S> resultant(const MultiPoly<S>& f, const MultiPoly<S>& g, std::size_t var) {
  return mat_det(sylvester_matrix(f, g, var));
}

}  // namespace algtool
