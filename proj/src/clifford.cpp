#include "algtool/clifford.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "algtool/error.hpp"

namespace algtool {

SymmetricForm::SymmetricForm(PolyMatrix<Rational> m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::kNotSquare, "symmetric form must be square");
  if (!m_.is_symmetric()) throw Error(ErrorCode::kAsymmetric, "form is not symmetric");
}

SymmetricForm example3_form(const Rational& t) {
  const Ring ring({"X", "Y", "Z"});
  const Field<Rational> q;
  auto var = [&](std::size_t i, const Rational& c) { return MultiPoly<Rational>::variable(ring, q, i) * c; };
  PolyMatrix<Rational> m(3, 3, ring, q);
  for (std::size_t i = 0; i < 3; ++i) m.set(i, i, var(i, Rational(2)));
  // Off-diagonal (i,j) carries t times the remaining variable.
  m.set(0, 1, var(2, t));
  m.set(1, 0, var(2, t));
  m.set(0, 2, var(1, t));
  m.set(2, 0, var(1, t));
  m.set(1, 2, var(0, t));
  m.set(2, 1, var(0, t));
  return SymmetricForm(std::move(m));
}

SymmetricForm diagonal_form(std::size_t n) {
  const Ring ring = Ring::indexed("y", n);
  const Field<Rational> q;
  PolyMatrix<Rational> m(n, n, ring, q);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, MultiPoly<Rational>::variable(ring, q, i) * Rational(2));
  return SymmetricForm(std::move(m));
}

DenseMatrix<Rational> specialize_form(const SymmetricForm& form, std::span<const Rational> point) {
  const std::size_t n = form.size();
  DenseMatrix<Rational> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = poly_eval(form.matrix().at(i, j), point);
  }
  return out;
}

Eigen::MatrixXcd specialize_form(const SymmetricForm& form, std::span<const ComplexF> point) {
  const auto n = static_cast<Eigen::Index>(form.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = poly_eval(form.matrix().at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), point);
    }
  }
  return out;
}

std::size_t symmetric_rank(const DenseMatrix<Rational>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw Error(ErrorCode::kNotSquare, "rank of a non-square form");
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) throw Error(ErrorCode::kAsymmetric, "matrix is not symmetric");
    }
  }
  return exact_rank(m, Field<Rational>{});
}

NumericRank symmetric_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "rank of a non-square form");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::kAsymmetric, "matrix is not symmetric");
  }
  return numeric_rank(m, tol);
}

RankProfile simple_profile(int k, int n) {
  if (k < 0 || k > n) throw Error(ErrorCode::kRange, "rank must lie in [0, n]");
  RankProfile r;
  r.rank = k;
  if (k % 2 == 1) {
    r.simple_count = 2;
    r.simple_dim = 1L << ((k - 1) / 2);
  } else {
    r.simple_count = 1;
    r.simple_dim = 1L << (k / 2);
  }
  return r;
}

RankProfile fat_profile(int k) {
  if (k < 1) throw Error(ErrorCode::kRange, "rank 0 has no graded point");
  RankProfile r;
  r.rank = k;
  if (k % 2 == 1) {
    r.fat_count = 1;
    r.fat_multiplicity = 1L << ((k - 1) / 2);
  } else {
    r.fat_count = 2;
    r.fat_multiplicity = 1L << (k / 2 - 1);
  }
  return r;
}

RankProfile rank_profile(int k, int n) {
  RankProfile r = simple_profile(k, n);
  if (k >= 1) {
    const RankProfile f = fat_profile(k);
    r.fat_count = f.fat_count;
    r.fat_multiplicity = f.fat_multiplicity;
  }
  return r;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// k anticommuting involutions of size 2^{floor(k/2)}.
std::vector<Eigen::MatrixXcd> gammas(int k) {
  const int m = k / 2;
  Eigen::MatrixXcd x(2, 2), y(2, 2), z(2, 2), id = Eigen::MatrixXcd::Identity(2, 2);
  x << 0, 1, 1, 0;
  y << 0, ComplexF(0, -1), ComplexF(0, 1), 0;
  z << 1, 0, 0, -1;
  std::vector<Eigen::MatrixXcd> out;
  for (int j = 0; j < m; ++j) {
    for (const auto* pauli : {&x, &y}) {
      Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(1, 1);
      for (int q = 0; q < m; ++q) g = kron(g, q < j ? z : (q == j ? *pauli : id));
      out.push_back(std::move(g));
    }
  }
  if (k % 2 == 1) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < m; ++q) g = kron(g, z);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

double anticommutator_residual(const std::vector<Eigen::MatrixXcd>& x, const Eigen::MatrixXcd& m) {
  if (x.empty()) return 0.0;
  const Eigen::Index dim = x.front().rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  const double scale = std::max(m.norm(), 1e-300) * std::sqrt(static_cast<double>(dim));
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i; j < x.size(); ++j) {
      const Eigen::MatrixXcd r = x[i] * x[j] + x[j] * x[i] -
                                 m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * id;
      worst = std::max(worst, r.norm());
    }
  }
  return m.norm() == 0.0 ? worst : worst / scale;
}

std::vector<CliffordRep> build_reps(const Eigen::MatrixXcd& m, int rank, double tol) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kNotSquare, "form must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::kAsymmetric, "matrix is not symmetric");
  }
  if (rank < 0 || rank > n) throw Error(ErrorCode::kRange, "rank out of range");
  // M ū = σ u  ⇔  [[B, C], [C, −B]] [x; y] = σ [x; y] with M = B + iC, u = x + iy.
  const Eigen::MatrixXd b = m.real();
  const Eigen::MatrixXd c = m.imag();
  Eigen::MatrixXd h(2 * n, 2 * n);
  h << b, c, c, -b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::kConditioning, "eigen decomposition failed");
  const auto& ev = es.eigenvalues();  // ascending
  const double smax = std::max(std::abs(ev(0)), std::abs(ev(2 * n - 1)));
  if (rank > 0 && ev(2 * n - rank) <= tol * smax) {
    throw Error(ErrorCode::kConditioning, "a Takagi value counted in the stated rank is below tolerance");
  }
  Eigen::MatrixXcd s(n, rank);  // columns √σ_l u_l
  for (int l = 0; l < rank; ++l) {
    const Eigen::Index col = 2 * n - 1 - l;
    const Eigen::VectorXd vx = es.eigenvectors().col(col).head(n);
    const Eigen::VectorXd vy = es.eigenvectors().col(col).tail(n);
    s.col(l) = std::sqrt(ev(col)) * (vx.cast<ComplexF>() + ComplexF(0, 1) * vy.cast<ComplexF>());
  }
  const auto g = gammas(rank);
  const Eigen::Index dim = Eigen::Index{1} << (rank / 2);
  const int variants = rank % 2 == 1 ? 2 : 1;
  std::vector<CliffordRep> out;
  for (int v = 0; v < variants; ++v) {
    CliffordRep rep;
    auto gam = g;
    if (v == 1) gam.back() = -gam.back();
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
      for (int l = 0; l < rank; ++l) x += s(i, l) * gam[static_cast<std::size_t>(l)];
      rep.generators.push_back(x / std::sqrt(2.0));
    }
    Eigen::MatrixXcd top = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& gm : gam) top = top * gm;
    rep.top_trace = top.trace() / static_cast<double>(dim);
    rep.residual = anticommutator_residual(rep.generators, m);
    out.push_back(std::move(rep));
  }
  return out;
}

CenterData center_data(const SymmetricForm& form) {
  CenterData out{mat_det(form.matrix()), 0, form.size() % 2 == 1, ""};
  out.x_degree = 2 * out.det.total_degree();
  const std::string n = std::to_string(form.size());
  out.description = "center generated by the " + n + " central y's of degree 2 and g of degree " + n +
                    ", subject to g^2 = det M (" + (out.n_odd ? "odd" : "even") + " n)";
  return out;
}

}  // namespace algtool
