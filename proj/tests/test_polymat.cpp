#include <doctest.h>

#include <random>

#include "algtool/error.hpp"
#include "algtool/linalg.hpp"
#include "algtool/polymatrix.hpp"
#include "algtool/shioda5.hpp"
#include "algtool/sklyanin2.hpp"

using namespace algtool;

namespace {

using P = MultiPoly<Rational>;

P var(const Ring& r, const std::string& name) { return P::variable(r, {}, r.index_of(name)); }
P num(const Ring& r, long c) { return P::constant(r, {}, Rational(c)); }

P random_poly(std::mt19937_64& rng, const Ring& r, int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5), exp(0, max_deg);
  P f(r);
  for (int k = 0; k < 4; ++k) {
    Monomial m(r.size(), 0);
    for (auto& e : m) e = exp(rng);
    f.add_term(m, Rational(coef(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  const Ring r({"x", "y"});
  const auto x = var(r, "x"), y = var(r, "y");
  const auto f = (x + y) * (x - y);
  CHECK(f.size() == 2);
  CHECK(f - f == P(r));
  CHECK((f - f).is_zero());
  CHECK((f - f).total_degree() == -1);
  CHECK(to_text(f) == "1 * x^2 + -1 * y^2");
}

TEST_CASE("ring arithmetic laws on random polynomials") {
  std::mt19937_64 rng(5);
  const Ring r({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, r, 3), g = random_poly(rng, r, 3), h = random_poly(rng, r, 2);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(pow(f, 2) == f * f);
    if (!g.is_zero()) {
      const auto q = exact_divide(f * g, g);
      REQUIRE(q.has_value());
      CHECK(*q == f);
    }
    // Product rule.
    CHECK(poly_partial(f * g, 0) == poly_partial(f, 0) * g + f * poly_partial(g, 0));
  }
}

TEST_CASE("mixing rings is rejected") {
  const Ring r({"x"}), s({"y"});
  CHECK_THROWS_AS(var(r, "x") + var(s, "y"), Error);
  CHECK_THROWS_AS(r.index_of("q"), Error);
}

TEST_CASE("evaluation") {
  const Ring r({"a", "b"});
  const auto c = cprime_poly();
  const std::vector<Rational> pt{1, 1};
  CHECK(poly_eval(c, std::span<const Rational>(pt)) == -5);
  const std::vector<Rational> on{2, 2};
  CHECK(poly_eval(c, std::span<const Rational>(on)) == 0);
  CHECK(cprime_residual(Rational(1), Rational(1)) == -5);
  CHECK(cprime_residual(2.0, 2.0) == doctest::Approx(0.0));
  (void)r;
}

TEST_CASE("determinant strategies agree") {
  std::mt19937_64 rng(17);
  const Ring r({"s", "t"});
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    PolyMatrix<Rational> m(n, n, r);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_poly(rng, r, 1));
    }
    CHECK(det_cofactor(m) == det_bareiss(m));
    CHECK(mat_det(m) == det_cofactor(m));
  }
  PolyMatrix<Rational> rect(2, 3, r);
  CHECK_THROWS_AS(mat_det(rect), Error);
}

TEST_CASE("the Vandermonde determinant factors") {
  const Ring r({"x", "y", "z"});
  const auto x = var(r, "x"), y = var(r, "y"), z = var(r, "z");
  PolyMatrix<Rational> v(3, 3, r);
  const std::vector<P> xs{x, y, z};
  for (std::size_t i = 0; i < 3; ++i) {
    v.set(i, 0, num(r, 1));
    v.set(i, 1, xs[i]);
    v.set(i, 2, xs[i] * xs[i]);
  }
  CHECK(mat_det(v) == (y - x) * (z - x) * (z - y));
}

TEST_CASE("minors come in row-set then column-set order") {
  const auto s = s15_matrix();
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 5);
  const auto m = mat_minors(s, 3);
  CHECK(m.size() == 10);
  for (const auto& f : m) {
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == 6);
  }
  CHECK(mat_minors(s, 1).size() == 15);
  CHECK(mat_minors(s, 2).size() == 30);
  CHECK_THROWS_AS(mat_minors(s, 4), Error);
  CHECK_THROWS_AS(mat_minors(s, 0), Error);
  const auto subsets = k_subsets(5, 3);
  REQUIRE(subsets.size() == 10);
  CHECK(subsets.front() == std::vector<std::size_t>{0, 1, 2});
  CHECK(subsets[1] == std::vector<std::size_t>{0, 1, 3});
  CHECK(subsets.back() == std::vector<std::size_t>{2, 3, 4});
  CHECK(m.front() == mat_det(s.submatrix({0, 1, 2}, {0, 1, 2})));
}

TEST_CASE("resultant of two linear forms and the order-two elimination") {
  const Ring r({"x", "t"});
  const auto x = var(r, "x"), t = var(r, "t");
  // Sylvester matrix [[1, -x], [1, x]].
  CHECK(resultant(t - x, t + x, 1) == x * Rational(2));
  CHECK_THROWS_AS(resultant(x, t, 1), Error);
  const auto e = eliminate_t();
  CHECK(e.check);
  CHECK(to_text(e.cofactor) == "-4 * a^5 * b^3");
  CHECK(e.resultant == e.cofactor * cprime_poly());
}

TEST_CASE("real roots include those of even multiplicity") {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  const auto r = real_roots({2.0, -3.0, 0.0, 1.0});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-2.0));
  CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-9));
  // x^2 + 1 has none.
  CHECK(real_roots({1.0, 0.0, 1.0}).empty());
  // (x - 3)^4 is found once; a fourfold root is only fixed to about the fourth root of rounding.
  const auto q = real_roots({81.0, -108.0, 54.0, -12.0, 1.0});
  REQUIRE(q.size() == 1);
  CHECK(std::abs(q[0] - 3.0) < 1e-3);
}

TEST_CASE("numeric coefficients") {
  const Ring r({"u"});
  auto f = MultiPoly<double>::variable(r, {}, 0);
  f = f * f - MultiPoly<double>::constant(r, {}, 2.0);
  const std::vector<double> pt{std::sqrt(2.0)};
  CHECK(poly_eval(f, std::span<const double>(pt)) == doctest::Approx(0.0).epsilon(1e-12));
}
