#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algtool/clifford.hpp"
#include "algtool/graded.hpp"
#include "algtool/tolerances.hpp"

namespace algtool {

/// Q(a,b) over ring u0..u4: M_ii = 2u_i; for i ≠ j with d = j−i mod 5 the entry
/// is (b if d ∈ {1,4} else a)·u_{3(i+j) mod 5}, i.e. u_k for {i,j} = {k+s, k−s}.
template <class S>
PolyMatrix<S> q5_matrix(const S& a, const S& b, const Field<S>& field = {}) {
  const Ring ring = Ring::indexed("u", 5);
  PolyMatrix<S> m(5, 5, ring, field);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const std::size_t d = (j + 5 - i) % 5;
      const auto u = MultiPoly<S>::variable(ring, field, (3 * (i + j)) % 5);
      if (d == 0) {
        m.set(i, j, u * field.from_rational(Rational(2)));
      } else {
        m.set(i, j, u * ((d == 1 || d == 4) ? b : a));
      }
    }
  }
  return m;
}

SymmetricForm q5_form(const Rational& a, const Rational& b);

/// Q(a,b) evaluated at a complex point, straight from the entry rule.
Eigen::MatrixXcd q5_numeric(double a, double b, const std::vector<ComplexF>& u);

/// C′ = −a³b³ + a⁵ + b⁵ + 2a²b² − 8ab in ring (a, b).
MultiPoly<Rational> cprime_poly();

template <class S>
S cprime_residual(const S& a, const S& b) {
  const S a2 = a * a, b2 = b * b;
  const S a3 = a2 * a, b3 = b2 * b;
  return -(a3 * b3) + a3 * a2 + b3 * b2 + S(2) * a2 * b2 - S(8) * a * b;
}

/// t = (a³b − b³ − 2a²)/(a⁴ − ab² − 4b); nullopt when both vanish; kPole when
/// only the denominator does. Float inputs treat a part as zero when it is
/// below 1e−12 of the sum of its terms' magnitudes.
std::optional<Rational> t_param(const Rational& a, const Rational& b);
std::optional<double> t_param(double a, double b);

struct Elimination {
  MultiPoly<Rational> resultant;  // ring (a, b)
  MultiPoly<Rational> cofactor;   // resultant / C′ when check holds
  bool check = false;
};

/// Resultant in t of −2b²t³ + 2ab²t − 2a² and −a²bt² − ab²t + 2a².
Elimination eliminate_t();

struct CurvePoint {
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;
};

/// Real points of C′ over each grid value of a (roots in b, polished).
std::vector<CurvePoint> curve_points(const std::vector<double>& a_grid);
/// The three real points over a = 1, used as the default numeric sample.
std::vector<CurvePoint> default_curve_points();

/// The 25 images of (0, 1, t, −t, −1) under ρ(e1^c e2^d) in V_1, each scaled to max|u| = 1.
std::vector<std::vector<ComplexF>> e_prime_orbit(double t);

struct PointModuleReport {
  double t = 0.0;
  std::size_t points = 0;
  std::size_t distinct_points = 0;
  std::size_t minors_evaluated = 0;
  double max_minor = 0.0;
  std::vector<std::size_t> ranks;
  bool pass = false;
};

/// Throws kIndeterminate at a singular parameter (t = 0/0).
PointModuleReport point_module_check(const CurvePoint& cp, const Tolerances& tol = {});

struct Stratum {
  std::string name;
  int expected_rank = 0;
  std::vector<std::size_t> ranks;
  double min_kept_ratio = 1.0;     // over all points: smallest σ counted, relative
  double max_dropped_ratio = 0.0;  // over all points: largest σ discarded, relative
  RankProfile profile;
  bool pass = false;
};

struct Stratification {
  double t = 0.0;
  std::vector<Stratum> strata;  // generic, det Q = 0 off E′, E′
  bool pass = false;
};

/// `samples` random points, `samples` roots of det Q on random lines, and the E′ orbit.
Stratification stratify(const CurvePoint& cp, int samples, std::uint64_t seed, const Tolerances& tol = {});

struct MinorIdealReport {
  double t = 0.0;
  bool deg6 = false;
  bool deg8 = false;
  SpanComparison cubic;    // 3×3 minors against u_j q_i
  SpanComparison quartic;  // 4×4 minors against q_i q_j
};

/// q_i = t·u_i² + t²·u_{i+1}u_{i+4} − u_{i+2}u_{i+3}.
std::vector<MultiPoly<double>> ct_quadrics(double t);
MinorIdealReport minor_ideal_checks(double a, double b, const Tolerances& tol = {});

struct SecantReport {
  double t = 0.0;
  double lambda = 0.0;
  double residual = 0.0;
  int jacobian_degree = 0;
  int det_degree = 0;
};

/// det(∂Q_i/∂z_j) for Q_i = z_i² + t z_{i+1}z_{i+4} − (1/t) z_{i+2}z_{i+3}
/// against det Q(a,b); throws kRange when t = 0.
SecantReport secant_check(const CurvePoint& cp);

/// Scalars y_0..y_{p−1} with y_0 = 1 solving every cliffordC(p, a) relation.
/// Throws kHypothesis when a_i = 0 for all i ≥ 1.
std::vector<std::vector<Cyclotomic>> onedim_reps(int p, const std::vector<Rational>& a);

/// Value of a degree-2 relation on commuting scalars.
Cyclotomic evaluate_commutative(const Relation& r, int p, const std::vector<Cyclotomic>& y);

}  // namespace algtool
