#include <doctest.h>

#include <set>

#include "algtool/error.hpp"
#include "algtool/graded.hpp"
#include "algtool/sklyanin2.hpp"

using namespace algtool;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

// Curve points over a = 1, t and the secant ratio, from a 50-digit reference computation.
struct Frozen {
  double b, t, lambda;
};
const Frozen kPoints[] = {
    {-2.018739572308024, 0.841708897970, -0.24538013851912752},
    {0.12888995128730366, -4.004148851643, -60.19520265428497},
    {1.6121165599055256, 0.568836274020, -0.38477524352724757},
};

}  // namespace

TEST_CASE("Q(a,b) is the relation matrix of the five-generator algebra") {
  const Rational a(3, 2), b(-1, 3);
  const auto pres = make_presentation("sklyanin5", 5, {a, b});
  const auto q = q5_matrix(a, b);
  std::size_t matched = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const int k = (3 * (i + j)) % 5;
      Monomial uk(5, 0);
      uk[static_cast<std::size_t>(k)] = 1;
      CHECK(q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).size() == 1);
      const Rational entry = q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).coefficient(uk);
      for (const auto& r : pres.relations) {
        const auto ij = r.coeffs.find(word_index({i, j}, 5));
        if (ij == r.coeffs.end()) continue;
        ++matched;
        // x_i x_j + x_j x_i = Q_ij(u) with u_k = x_k².
        const Rational scale = ij->second;
        CHECK(r.coeffs.at(word_index({j, i}, 5)) == scale);
        CHECK(r.coeffs.at(word_index({k, k}, 5)) == -entry * scale);
        CHECK(r.coeffs.size() == 3);
      }
    }
  }
  CHECK(matched == 10);
  for (std::size_t i = 0; i < 5; ++i) {
    Monomial ui(5, 0);
    ui[i] = 1;
    CHECK(q.at(i, i) == MultiPoly<Rational>::term(q.ring(), {}, ui, Rational(2)));
  }
}

TEST_CASE("the parameter t") {
  CHECK(*t_param(Rational(0), Rational(1)) == Rational(1, 4));
  CHECK_FALSE(t_param(Rational(2), Rational(2)).has_value());
  CHECK(code_of([] { t_param(Rational(2), Rational(-4)); }) == ErrorCode::kPole);
  CHECK(*t_param(1.0, 0.5) == doctest::Approx(1.3));
  CHECK_FALSE(t_param(2.0, 2.0).has_value());
  CHECK(code_of([] { t_param(2.0, -4.0); }) == ErrorCode::kPole);
}

TEST_CASE("C' has three real points over a = 1") {
  const auto pts = default_curve_points();
  REQUIRE(pts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(pts[i].a == 1.0);
    CHECK(pts[i].b == doctest::Approx(kPoints[i].b).epsilon(1e-12));
    CHECK(std::abs(cprime_residual(pts[i].a, pts[i].b)) < 1e-12);
    CHECK(*t_param(pts[i].a, pts[i].b) == doctest::Approx(kPoints[i].t).epsilon(1e-11));
  }
  // Over a = 0 the curve is b⁵ = 0.
  const auto zero = curve_points({0.0});
  REQUIRE(zero.size() == 1);
  CHECK(std::abs(zero[0].b) < 1e-6);
}

TEST_CASE("C' over a = 2 passes through the singular point (2,2)") {
  // b = 2 is a double root of C'(2, b); the other real root is simple.
  const auto pts = curve_points({2.0});
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].b == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(code_of([&] { point_module_check(pts[1]); }) == ErrorCode::kIndeterminate);
}

TEST_CASE("C' monomial support fixture") {
  CHECK(to_text(cprime_poly()) == "-1 * a^3 * b^3 + 1 * a^5 + 1 * b^5 + 2 * a^2 * b^2 + -8 * a * b");
}

TEST_CASE("near curve points the algebra has the Hilbert series of a polynomial ring") {
  std::vector<CurvePoint> pts;
  for (const auto& cp : curve_points({1.0, 2.0, -1.0})) {
    if (pts.size() < 5 && t_param(cp.a, cp.b)) pts.push_back(cp);
  }
  REQUIRE(pts.size() == 5);
  for (const auto& cp : pts) {
    const Rational a = rational_approximation(cp.a, 10000), b = rational_approximation(cp.b, 10000);
    CHECK(hilbert(make_presentation("sklyanin5", 5, {a, b}), 3) == std::vector<long>{1, 5, 15, 35});
  }
}

TEST_CASE("cliffordC character tables at exact points match the polynomial ring") {
  const auto poly = character_table(make_presentation("polynomial", 5, {}), SimpleRep::standard(5, 1), 3);
  for (const auto& a : std::vector<std::vector<Rational>>{{1, 2, 3}, {1, Rational(1, 2), -3}, {2, -1, 5}}) {
    CHECK(character_table(make_presentation("cliffordC", 5, a), SimpleRep::standard(5, 1), 3) == poly);
  }
}

TEST_CASE("the orbit of (0,1,t,-t,-1) has 25 distinct points") {
  const auto orbit = e_prime_orbit(0.7);
  CHECK(orbit.size() == 25);
  for (const auto& u : orbit) {
    double m = 0.0;
    for (const auto& x : u) m = std::max(m, std::abs(x));
    CHECK(m == doctest::Approx(1.0));
  }
}

TEST_CASE("Q has rank 2 along the orbit at every curve point") {
  for (const auto& cp : default_curve_points()) {
    const auto r = point_module_check(cp);
    CHECK(r.pass);
    CHECK(r.points == 25);
    CHECK(r.distinct_points == 25);
    CHECK(r.max_minor < 1e-12);
    CHECK(std::set<std::size_t>(r.ranks.begin(), r.ranks.end()) == std::set<std::size_t>{2});
  }
  CHECK(code_of([] { point_module_check({2.0, 2.0, 0.0}); }) == ErrorCode::kIndeterminate);
}

TEST_CASE("off the curve the orbit points are not in the rank 2 locus") {
  const auto r = point_module_check({1.0, 0.5, cprime_residual(1.0, 0.5)});
  CHECK_FALSE(r.pass);
  CHECK(r.max_minor > 1e-3);
}

TEST_CASE("minor spans against the quadrics") {
  for (const auto& f : kPoints) {
    const auto r = minor_ideal_checks(1.0, f.b);
    CHECK(r.deg6);
    CHECK(r.deg8);
    CHECK(r.cubic.rank_a == 20);
    CHECK(r.cubic.rank_b == 20);
    CHECK(r.quartic.rank_a == 15);
    CHECK(r.quartic.rank_b == 15);
  }
  const auto off = minor_ideal_checks(1.0, 0.5);
  CHECK_FALSE(off.deg6);
  CHECK_FALSE(off.deg8);
  CHECK(off.cubic.rank_a == 35);
  CHECK(off.cubic.rank_b == 20);
  CHECK(off.quartic.rank_a == 15);
  CHECK(off.quartic.rank_b == 15);
  CHECK_FALSE(off.quartic.equal);
}

TEST_CASE("det Q is proportional to the Jacobian of the secant quadrics") {
  for (const auto& f : kPoints) {
    const auto r = secant_check({1.0, f.b, 0.0});
    CHECK(r.residual < 1e-12);
    CHECK(r.lambda == doctest::Approx(f.lambda).epsilon(1e-8));
    CHECK(r.jacobian_degree == 5);
    CHECK(r.det_degree == 5);
  }
  CHECK(secant_check({1.0, 0.5, 0.0}).residual > 1e-3);
}

TEST_CASE("rank stratification") {
  const auto s = stratify(default_curve_points()[1], 6, 42);
  CHECK(s.pass);
  REQUIRE(s.strata.size() == 3);
  CHECK(s.strata[0].expected_rank == 5);
  CHECK(s.strata[1].expected_rank == 4);
  CHECK(s.strata[2].expected_rank == 2);
  CHECK(s.strata[0].profile.fat_multiplicity == 4);
  CHECK(s.strata[1].profile.fat_count == 2);
  CHECK(s.strata[2].profile.fat_multiplicity == 1);
  // Same seed, same report.
  const auto again = stratify(default_curve_points()[1], 6, 42);
  for (std::size_t i = 0; i < 3; ++i) CHECK(again.strata[i].min_kept_ratio == s.strata[i].min_kept_ratio);
}

TEST_CASE("one-dimensional representations") {
  const auto reps = onedim_reps(5, {1, 2, 2});
  CHECK(reps.size() == 5);
  const auto pres = make_presentation("cliffordC", 5, {1, 2, 2});
  for (const auto& y : reps) {
    CHECK(y[0].is_one());
    for (const auto& r : pres.relations) CHECK(evaluate_commutative(r, 5, y).is_zero());
  }
  CHECK(onedim_reps(5, {1, 1, 1}).empty());
  CHECK(onedim_reps(5, {0, 1, 1}).empty());
  CHECK(code_of([] { onedim_reps(5, {1, 0, 0}); }) == ErrorCode::kHypothesis);
}

TEST_CASE("p = 3 one-dimensional representations by exhaustive search") {
  // With a = (1,2): y1 y2 = 1, y2 = y1², y1 = y2², so y1³ = 1 and every solution is a cube root of unity.
  const auto pres = make_presentation("cliffordC", 3, {1, 2});
  std::size_t found = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const std::vector<Cyclotomic> y{Cyclotomic(3, 1), Cyclotomic::omega_power(3, i), Cyclotomic::omega_power(3, j)};
      bool ok = true;
      for (const auto& r : pres.relations) ok = ok && evaluate_commutative(r, 3, y).is_zero();
      found += ok;
    }
  }
  CHECK(found == 3);
  CHECK(onedim_reps(3, {1, 2}).size() == found);
}
