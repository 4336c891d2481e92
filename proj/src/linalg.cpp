#include "algtool/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace algtool {

NumericRank numeric_rank(const Eigen::MatrixXcd& m, double tol, double floor) {
  NumericRank out;
  if (m.size() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = out.singular_values.empty() ? 0.0 : out.singular_values.front();
  out.reference = std::max(smax, floor);
  if (out.reference == 0.0) return out;
  const double cut = tol * out.reference;
  for (double s : out.singular_values) {
    if (s > cut) {
      ++out.rank;
      out.kept_min_ratio = s / out.reference;
    } else {
      out.dropped_max_ratio = std::max(out.dropped_max_ratio, s / out.reference);
    }
  }
  return out;
}

Eigen::MatrixXcd to_eigen(const DenseMatrix<ComplexF>& rows) {
  if (rows.empty()) return {};
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) throw Error(ErrorCode::kArity, "ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

namespace {

// Columns are the unit-normalised vectors; zero vectors stay zero.
Eigen::MatrixXcd normalised_columns(const DenseMatrix<ComplexF>& vecs, std::size_t len, std::vector<double>& norms) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(vecs.size()));
  norms.assign(vecs.size(), 0.0);
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    if (vecs[j].size() != len) throw Error(ErrorCode::kArity, "span_membership vectors differ in length");
    double n2 = 0.0;
    for (const auto& x : vecs[j]) n2 += std::norm(x);
    norms[j] = std::sqrt(n2);
    if (norms[j] == 0.0) continue;
    for (std::size_t i = 0; i < len; ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vecs[j][i] / norms[j];
    }
  }
  return m;
}

}  // namespace

FloatMembership span_membership_float(const DenseMatrix<ComplexF>& basis, const std::vector<ComplexF>& target,
                                      double tol) {
  const std::size_t len = target.size();
  std::vector<double> norms;
  Eigen::MatrixXcd b = normalised_columns(basis, len, norms);
  std::vector<double> tnorm;
  Eigen::MatrixXcd t = normalised_columns({target}, len, tnorm);
  FloatMembership out;
  out.basis_rank = basis.empty() ? 0 : numeric_rank(b, tol).rank;
  Eigen::MatrixXcd aug(static_cast<Eigen::Index>(len), b.cols() + 1);
  aug << b, t;
  out.augmented_rank = numeric_rank(aug, tol).rank;
  out.member = out.augmented_rank == out.basis_rank;
  out.coords.assign(basis.size(), ComplexF(0.0, 0.0));
  if (out.member && !basis.empty() && tnorm[0] != 0.0) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(tol);
    Eigen::VectorXcd c = svd.solve(t.col(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (norms[j] != 0.0) out.coords[j] = c(static_cast<Eigen::Index>(j)) * tnorm[0] / norms[j];
    }
  }
  return out;
}

SpanComparison compare_spans_float(const DenseMatrix<ComplexF>& a, const DenseMatrix<ComplexF>& b, double tol) {
  SpanComparison out;
  if (a.empty() || b.empty()) throw Error(ErrorCode::kRange, "span comparison needs non-empty families");
  std::vector<double> norms;
  out.rank_a = numeric_rank(normalised_columns(a, a.front().size(), norms), tol).rank;
  out.rank_b = numeric_rank(normalised_columns(b, b.front().size(), norms), tol).rank;
  for (const auto& v : a) {
    if (!span_membership_float(b, v, tol).member) ++out.a_outside_b;
  }
  for (const auto& v : b) {
    if (!span_membership_float(a, v, tol).member) ++out.b_outside_a;
  }
  out.equal = out.a_outside_b == 0 && out.b_outside_a == 0;
  return out;
}

namespace {

template <class T>
T horner(const std::vector<T>& c, T x) {
  T acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

template <class T>
T horner_derivative(const std::vector<T>& c, T x) {
  T acc = 0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + c[k] * static_cast<double>(k);
  return acc;
}

}  // namespace

std::vector<ComplexF> polynomial_roots(std::vector<ComplexF> coeffs) {
  while (!coeffs.empty() && coeffs.back() == ComplexF(0.0, 0.0)) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::kInternal, "companion eigenvalue solver failed");
  std::vector<ComplexF> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (auto& r : roots) {
    for (int it = 0; it < 4; ++it) {
      const ComplexF d = horner_derivative(coeffs, r);
      if (std::abs(d) == 0.0) break;
      const ComplexF step = horner(coeffs, r) / d;
      if (!std::isfinite(std::abs(step))) break;
      r -= step;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const ComplexF& x, const ComplexF& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

std::vector<double> real_roots(const std::vector<double>& coeffs_in, int grid) {
  std::vector<double> c = coeffs_in;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) return {};
  // Cauchy bound on root moduli.
  double bound = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) bound = std::max(bound, std::abs(c[k] / c.back()));
  bound += 1.0;
  std::vector<double> roots;
  double prev_x = -bound;
  double prev_v = horner(c, prev_x);
  for (int s = 1; s <= grid; ++s) {
    const double x = -bound + 2.0 * bound * s / grid;
    const double v = horner(c, x);
    if (prev_v == 0.0) {
      roots.push_back(prev_x);
    } else if ((prev_v < 0) != (v < 0) && v != 0.0) {
      double lo = prev_x, hi = x, vlo = prev_v;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double vm = horner(c, mid);
        if ((vm < 0) == (vlo < 0)) {
          lo = mid;
          vlo = vm;
        } else {
          hi = mid;
        }
      }
      double r = 0.5 * (lo + hi);
      for (int it = 0; it < 3; ++it) {
        const double d = horner_derivative(c, r);
        if (d == 0.0) break;
        const double nr = r - horner(c, r) / d;
        if (nr < prev_x || nr > x) break;
        r = nr;
      }
      roots.push_back(r);
    }
    prev_x = x;
    prev_v = v;
  }
  // Roots of even multiplicity show no sign change: take the critical points where f vanishes to rounding.
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  auto floor_at = [&](double x) {
    double scale = 0.0, pw = 1.0;
    for (double ck : c) {
      scale += std::abs(ck) * pw;
      pw *= std::abs(x);
    }
    return 1e-12 * scale;
  };
  auto vanishes = [&](double x) { return std::abs(horner(c, x)) <= floor_at(x); };
  // Two candidates are one root when f stays below the rounding floor all the way between them.
  auto same_root = [&](double x, double r) {
    for (int k = 0; k <= 16; ++k) {
      if (!vanishes(x + (r - x) * k / 16.0)) return false;
    }
    return true;
  };
  for (double r : real_roots(d, grid)) {
    if (!vanishes(r)) continue;
    if (std::none_of(roots.begin(), roots.end(), [&](double x) { return same_root(x, r); })) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace algtool
