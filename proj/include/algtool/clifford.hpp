#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "algtool/linalg.hpp"
#include "algtool/polymatrix.hpp"

namespace algtool {

/// Symmetric n×n matrix of linear forms in central variables y_1..y_n of
/// degree 2; defines x_i x_j + x_j x_i = M_ij.
class SymmetricForm {
 public:
  /// Throws kAsymmetric unless M_ij = M_ji exactly, kNotSquare if not square.
  explicit SymmetricForm(PolyMatrix<Rational> m);

  std::size_t size() const { return m_.rows(); }
  const PolyMatrix<Rational>& matrix() const { return m_; }
  const Ring& ring() const { return m_.ring(); }

 private:
  PolyMatrix<Rational> m_;
};

/// The order-2 three-generator form [[2X, tZ, tY], [tZ, 2Y, tX], [tY, tX, 2Z]] in X=x², Y=y², Z=z².
SymmetricForm example3_form(const Rational& t);
/// diag(2y_0, …, 2y_{n-1}).
SymmetricForm diagonal_form(std::size_t n);

DenseMatrix<Rational> specialize_form(const SymmetricForm& form, std::span<const Rational> point);
Eigen::MatrixXcd specialize_form(const SymmetricForm& form, std::span<const ComplexF> point);

std::size_t symmetric_rank(const DenseMatrix<Rational>& m);
NumericRank symmetric_rank(const Eigen::MatrixXcd& m, double tol);

struct RankProfile {
  int rank = 0;
  int simple_count = 0;
  long simple_dim = 0;
  int fat_count = 0;
  long fat_multiplicity = 0;
};

/// k odd: 2 simples of dim 2^{(k-1)/2}; k even: 1 simple of dim 2^{k/2}.
RankProfile simple_profile(int k, int n);
/// k odd: 1 fat point of multiplicity 2^{(k-1)/2}; k even: 2 of multiplicity 2^{k/2-1}.
RankProfile fat_profile(int k);
/// Both parts; fat part left empty for k = 0.
RankProfile rank_profile(int k, int n);

struct CliffordRep {
  std::vector<Eigen::MatrixXcd> generators;  // X_1..X_n
  double residual = 0.0;                     // relative Frobenius anticommutator residual
  ComplexF top_trace;                        // tr(Γ_1⋯Γ_k)/dim of the diagonal generators
};

/// Takagi factorisation M = Σ σ_l u_l u_lᵀ, then X_i = Σ_l √(σ_l/2) u_l[i] Γ_l
/// with Jordan–Wigner gammas; odd rank yields a second rep with Γ_k negated.
std::vector<CliffordRep> build_reps(const Eigen::MatrixXcd& m, int rank, double tol = 1e-8);

/// max over i,j of ‖X_iX_j + X_jX_i − M_ij·Id‖_F, relative to ‖M‖_F·√dim.
double anticommutator_residual(const std::vector<Eigen::MatrixXcd>& x, const Eigen::MatrixXcd& m);

struct CenterData {
  MultiPoly<Rational> det;
  int x_degree = 0;  // degree of det M with every y of degree 2
  bool n_odd = false;
  std::string description;
};

CenterData center_data(const SymmetricForm& form);

}  // namespace algtool
