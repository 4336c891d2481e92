#pragma once

#include <cstdint>
#include <vector>

#include "algtool/graded.hpp"
#include "algtool/linalg.hpp"
#include "algtool/polymatrix.hpp"
#include "algtool/tolerances.hpp"

namespace algtool {

/// Rows x_i², x_{i+2}x_{i+3}, x_{i+1}x_{i+4} for columns i = 0..4, ring x0..x4.
PolyMatrix<Rational> s15_matrix();
/// The 10 cubic-in-x² minors, column subsets in lexicographic order.
std::vector<MultiPoly<Rational>> s15_minors();

/// The 25 images of (0, 1, a, −a, −1) under ρ(e1^c e2^d) in V_1, exact over ℚ(ω₅).
std::vector<std::vector<Cyclotomic>> ca_orbit(const Rational& a);

struct OrbitReport {
  Rational a;
  std::size_t points = 0;
  bool relations = false;  // a x_i² + a² x_{i+1}x_{i−1} − x_{i+2}x_{i−2} all vanish
  bool minors = false;     // all S₁₅ minors vanish
  bool pass = false;
};

OrbitReport ca_orbit_check(const Rational& a);

struct TwoTorsionReport {
  int samples = 0;
  std::size_t roots = 0;
  double worst = 0.0;             // largest |minor| at a root, point scaled to max |x| = 1
  bool origin_exact = false;      // (1:0:0:0:0) is exactly on S₁₅
  double control_residual = 0.0;  // a root moved by 1e−2
  bool pass = false;
  bool control_pass = false;
};

TwoTorsionReport two_torsion_check(int samples, std::uint64_t seed, const Tolerances& tol = {});

struct SingularReport {
  std::vector<std::vector<Cyclotomic>> points;
  bool all_on_surface = false;
  std::vector<std::size_t> singular_ranks;  // Jacobian rank at each fixed point
  std::vector<std::size_t> smooth_ranks;    // at 10 orbit points with a = 1
  double max_singular_sigma = 0.0;
  double min_smooth_sigma2 = 0.0;  // second singular value, smallest over controls
  bool pass = false;
};

/// Jacobian ranks use σ relative to max(σ_max, 1) with tol.rank.
SingularReport singular_points_check(const Tolerances& tol = {});

/// Fiber relations over the cusp (A:B): AB x_i² + A² x_{i+1}x_{i−1} − B² x_{i+2}x_{i−2} plus commutators.
Presentation shioda_fiber(const Rational& A, const Rational& B);

/// x_i ↦ x_{m·i} on every word.
Presentation relabel(const Presentation& pres, int m);

bool same_relation_span(const Presentation& x, const Presentation& y);

struct FiberReport {
  bool direct_at_1_0 = false;        // fiber (1:0) = cycle(5)
  bool direct_at_0_1 = false;        // fiber (0:1) = cycle(5) without relabeling
  std::vector<int> relabel_at_0_1;   // multipliers m with relabel(cycle(5), m) = fiber (0:1)
  std::vector<long> hilbert;         // of fiber (0:1), degrees 0..3
  std::size_t cusp_cycles = 0;
  bool pass = false;
};

FiberReport cycle_fiber_equivalence();

/// Per cyclic subgroup of H₅, the H₅-orbits of lines through pairs of its fixed
/// points whose lines form a single closed 5-cycle.
std::size_t count_cusp_cycles();

}  // namespace algtool
