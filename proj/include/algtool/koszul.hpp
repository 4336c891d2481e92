#pragma once

#include <vector>

#include "algtool/graded.hpp"
#include "algtool/linalg.hpp"

namespace algtool {

/// R ⊂ V⊗V and R^⊥ ⊂ V*⊗V* under (x_i*⊗x_j*)(x_k⊗x_l) = δ_ik δ_jl.
struct QuadraticDualPair {
  Presentation original;
  Presentation dual;
  DenseMatrix<Rational> relation_basis;  // RREF basis of R
  DenseMatrix<Rational> dual_basis;      // basis of R^⊥
  DenseMatrix<Rational> evaluation;      // relation_basis · dual_basisᵀ, exactly zero
};

QuadraticDualPair quadratic_dual(const Presentation& pres);

/// Coefficients 1..N of Ch_A(g,t)·Ch_{(A^!)^*}(g,−t). The dual algebra is
/// acted on contragrediently, which on V_i is V_{p−i} in the dual basis; its
/// series is then conjugated to pass to the graded dual.
std::vector<Cyclotomic> koszul_identity_check(const Presentation& pres, const SimpleRep& rep,
                                              const HeisenbergElement& g, int max_degree);

/// Same, reusing engines for A and A^! across queries.
std::vector<Cyclotomic> koszul_residual(GradedEngine& a, GradedEngine& dual, const SimpleRep& rep,
                                        const HeisenbergElement& g, int max_degree);

}  // namespace algtool
