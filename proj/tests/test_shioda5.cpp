#include <doctest.h>

#include <algorithm>
#include <random>

#include "algtool/shioda5.hpp"

using namespace algtool;

TEST_CASE("the ten sextic minors are permuted by the cyclic shift") {
  const auto minors = s15_minors();
  REQUIRE(minors.size() == 10);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<ComplexF> x(5), shifted(5);
    for (auto& c : x) c = {g(rng), g(rng)};
    for (std::size_t i = 0; i < 5; ++i) shifted[i] = x[(i + 1) % 5];
    std::vector<double> at_x, at_shift;
    for (const auto& m : minors) {
      at_x.push_back(std::abs(poly_eval(m, std::span<const ComplexF>(x))));
      at_shift.push_back(std::abs(poly_eval(m, std::span<const ComplexF>(shifted))));
    }
    std::sort(at_x.begin(), at_x.end());
    std::sort(at_shift.begin(), at_shift.end());
    for (std::size_t i = 0; i < 10; ++i) CHECK(at_x[i] == doctest::Approx(at_shift[i]).epsilon(1e-10));
  }
}

TEST_CASE("the curves C_a lie on S15") {
  for (const auto& a : {Rational(1), Rational(2), Rational(0), Rational(3, 7), Rational(-5, 2)}) {
    const auto r = ca_orbit_check(a);
    CAPTURE(to_string(a));
    CHECK(r.points == 25);
    CHECK(r.relations);
    CHECK(r.minors);
    CHECK(r.pass);
  }
}

TEST_CASE("orbit points are moved among themselves by the cyclic shift") {
  const auto orbit = ca_orbit(2);
  for (const auto& pt : orbit) {
    std::vector<Cyclotomic> shifted(5, Cyclotomic(5));
    for (std::size_t i = 0; i < 5; ++i) shifted[i] = pt[(i + 1) % 5];
    const auto target = normalize_projective(shifted);
    const bool found = std::any_of(orbit.begin(), orbit.end(), [&](const std::vector<Cyclotomic>& q) {
      return normalize_projective(q) == target;
    });
    CHECK(found);
  }
}

TEST_CASE("2-torsion points lie on S15") {
  const auto r = two_torsion_check(12, 99);
  CHECK(r.samples == 12);
  CHECK(r.roots == 48);
  CHECK(r.worst < 1e-10);
  CHECK(r.origin_exact);
  CHECK(r.pass);
  CHECK(r.control_residual > 1e-5);
  CHECK(r.control_pass);
}

TEST_CASE("S15 is singular exactly at the 30 fixed points") {
  const auto r = singular_points_check();
  CHECK(r.points.size() == 30);
  CHECK(r.all_on_surface);
  CHECK(std::all_of(r.singular_ranks.begin(), r.singular_ranks.end(), [](std::size_t k) { return k < 2; }));
  CHECK(std::all_of(r.smooth_ranks.begin(), r.smooth_ranks.end(), [](std::size_t k) { return k == 2; }));
  CHECK(r.min_smooth_sigma2 == doctest::Approx(8.94427191).epsilon(1e-8));
  CHECK(r.max_singular_sigma < 1e-12);
  CHECK(r.pass);
}

TEST_CASE("relabelling") {
  const auto cyc = make_presentation("cycle", 5, {});
  CHECK(same_relation_span(relabel(cyc, 1), cyc));
  CHECK(same_relation_span(cyc, cyc));
  CHECK_FALSE(same_relation_span(cyc, make_presentation("polynomial", 5, {})));
  CHECK(same_relation_span(relabel(relabel(cyc, 2), 3), cyc));
}

TEST_CASE("the cycle algebra is the fiber over the cusps") {
  const auto r = cycle_fiber_equivalence();
  CHECK(r.direct_at_1_0);
  CHECK_FALSE(r.direct_at_0_1);
  CHECK(r.relabel_at_0_1 == std::vector<int>{2, 3});
  CHECK(r.hilbert == std::vector<long>{1, 5, 10, 15});
  CHECK(r.cusp_cycles == 12);
  CHECK(r.pass);
  CHECK(count_cusp_cycles() == 12);
}
