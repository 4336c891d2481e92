#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "algtool/error.hpp"
#include "algtool/field.hpp"

namespace algtool {

template <class S>
using DenseMatrix = std::vector<std::vector<S>>;

/// Reduced row-echelon form: pivot entries are 1 and the only nonzero in their column.
template <class S>
struct Rref {
  DenseMatrix<S> rows;              // nonzero rows only
  std::vector<std::size_t> pivots;  // strictly increasing
};

template <class S>
Rref<S> rref(DenseMatrix<S> m, const Field<S>& field) {
  static_assert(Field<S>::kExact, "exact row reduction only");
  Rref<S> out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && Field<S>::is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const S inv = field.one() / m[r][c];
    for (auto& x : m[r]) {
      if (!Field<S>::is_zero(x)) x *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || Field<S>::is_zero(m[i][c])) continue;
      const S f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!Field<S>::is_zero(m[r][j])) m[i][j] -= f * m[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <class S>
std::size_t exact_rank(const DenseMatrix<S>& m, const Field<S>& field) {
  return rref(m, field).rows.size();
}

template <class S>
struct Membership {
  bool member = false;
  std::vector<S> coords;  // target = Σ coords[i]·basis[i] when member
};

/// Exact decision by row reduction of [basis^T | target].
template <class S>
Membership<S> span_membership(const DenseMatrix<S>& basis, const std::vector<S>& target, const Field<S>& field) {
  const std::size_t len = target.size();
  for (const auto& b : basis) {
    if (b.size() != len) throw Error(ErrorCode::kArity, "span_membership vectors differ in length");
  }
  const std::size_t m = basis.size();
  DenseMatrix<S> aug(len, std::vector<S>(m + 1, field.zero()));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = basis[j][i];
    aug[i][m] = target[i];
  }
  const auto red = rref(std::move(aug), field);
  Membership<S> out;
  out.coords.assign(m, field.zero());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] == m) return out;
    out.coords[red.pivots[r]] = red.rows[r][m];
  }
  out.member = true;
  return out;
}

/// Basis of {v : A v = 0} for A with `cols` columns.
template <class S>
DenseMatrix<S> null_space(const DenseMatrix<S>& a, std::size_t cols, const Field<S>& field) {
  const auto red = rref(a, field);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  DenseMatrix<S> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(cols, field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// Singular-value rank with the margin on both sides of the threshold.
struct NumericRank {
  std::size_t rank = 0;
  std::vector<double> singular_values;  // descending
  double reference = 0.0;               // the value tolerances are relative to
  double kept_min_ratio = 0.0;          // smallest kept σ / reference (0 if none kept)
  double dropped_max_ratio = 0.0;       // largest dropped σ / reference (0 if none dropped)
};

/// σ counts as nonzero when σ > tol·max(σ_max, floor).
NumericRank numeric_rank(const Eigen::MatrixXcd& m, double tol, double floor = 0.0);

struct FloatMembership {
  bool member = false;
  std::size_t basis_rank = 0;
  std::size_t augmented_rank = 0;
  std::vector<ComplexF> coords;
};

/// Float decision: rank of the unit-normalised basis against the rank with the target appended.
FloatMembership span_membership_float(const DenseMatrix<ComplexF>& basis, const std::vector<ComplexF>& target,
                                      double tol);

struct SpanComparison {
  bool equal = false;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t a_outside_b = 0;  // vectors of A failing membership in span B
  std::size_t b_outside_a = 0;
};

/// Mutual float span_membership of two families.
SpanComparison compare_spans_float(const DenseMatrix<ComplexF>& a, const DenseMatrix<ComplexF>& b, double tol);

Eigen::MatrixXcd to_eigen(const DenseMatrix<ComplexF>& rows);

/// All complex roots of Σ coeffs[k] x^k (leading zeros stripped), companion
/// matrix eigenvalues polished by Newton steps.
std::vector<ComplexF> polynomial_roots(std::vector<ComplexF> coeffs);

/// Real roots of Σ coeffs[k] x^k, ascending. Sign changes are bracketed on a grid and
/// refined; even-multiplicity roots come from critical points where the value vanishes.
std::vector<double> real_roots(const std::vector<double>& coeffs, int grid = 20000);

}  // namespace algtool
