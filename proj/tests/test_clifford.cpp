#include <doctest.h>

#include <random>

#include "algtool/clifford.hpp"
#include "algtool/error.hpp"
#include "algtool/sklyanin2.hpp"

using namespace algtool;

namespace {

DenseMatrix<Rational> rat(std::initializer_list<std::initializer_list<long>> rows) {
  DenseMatrix<Rational> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long x : r) row.emplace_back(x);
    out.push_back(row);
  }
  return out;
}

Eigen::MatrixXcd random_symmetric(std::mt19937_64& rng, int n, int k) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd v(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) v(i, j) = {g(rng), g(rng)};
  return v * v.transpose();
}

}  // namespace

TEST_CASE("specialising the three-generator form") {
  const auto form = example3_form(1);
  const std::vector<Rational> pt{1, 0, 0};
  CHECK(specialize_form(form, std::span<const Rational>(pt)) == rat({{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  const std::vector<Rational> zero{0, 0, 0};
  CHECK(specialize_form(form, std::span<const Rational>(zero)) == rat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  const std::vector<Rational> short_pt{1, 0};
  CHECK_THROWS_AS(specialize_form(form, std::span<const Rational>(short_pt)), Error);
}

TEST_CASE("Q(0,0) at the all-ones point is twice the identity") {
  const auto q = q5_form(0, 0);
  const std::vector<Rational> ones(5, Rational(1));
  const auto m = specialize_form(q, std::span<const Rational>(ones));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(m[i][j] == (i == j ? 2 : 0));
  CHECK(q.matrix().is_symmetric());
}

TEST_CASE("asymmetric input is rejected") {
  const Ring r({"y"});
  PolyMatrix<Rational> m(2, 2, r);
  m.set(0, 1, MultiPoly<Rational>::variable(r, {}, 0));
  CHECK_THROWS_AS(SymmetricForm{m}, Error);
  Eigen::MatrixXcd a(2, 2);
  a << 1, 2, 3, 4;
  CHECK_THROWS_AS(symmetric_rank(a, 1e-8), Error);
}

TEST_CASE("exact and numeric ranks") {
  CHECK(symmetric_rank(rat({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}})) == 5);
  CHECK(symmetric_rank(rat({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}})) == 1);
  CHECK(symmetric_rank(rat({{0, 0}, {0, 0}})) == 0);
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto nr = symmetric_rank(random_symmetric(rng, n, k), 1e-8);
      CHECK(nr.rank == static_cast<std::size_t>(k));
      if (k > 0 && k < n) CHECK(nr.dropped_max_ratio < 1e-12);
    }
  }
}

TEST_CASE("rank profiles") {
  struct Row {
    int k, n, simple_count;
    long simple_dim;
    int fat_count;
    long fat_mult;
  };
  for (const auto& r : {Row{5, 5, 2, 4, 1, 4}, Row{4, 5, 1, 4, 2, 2}, Row{3, 5, 2, 2, 1, 2}, Row{2, 5, 1, 2, 2, 1},
                        Row{1, 5, 2, 1, 1, 1}, Row{3, 3, 2, 2, 1, 2}, Row{2, 3, 1, 2, 2, 1}, Row{6, 6, 1, 8, 2, 4}}) {
    const auto p = rank_profile(r.k, r.n);
    CAPTURE(r.k);
    CHECK(p.rank == r.k);
    CHECK(p.simple_count == r.simple_count);
    CHECK(p.simple_dim == r.simple_dim);
    CHECK(p.fat_count == r.fat_count);
    CHECK(p.fat_multiplicity == r.fat_mult);
  }
  const auto zero = rank_profile(0, 3);
  CHECK(zero.simple_count == 1);
  CHECK(zero.simple_dim == 1);
  CHECK(zero.fat_count == 0);
  CHECK_THROWS_AS(simple_profile(4, 3), Error);
  CHECK_THROWS_AS(fat_profile(0), Error);
}

TEST_CASE("Clifford representations of 2·Id") {
  const Eigen::MatrixXcd two2 = 2.0 * Eigen::MatrixXcd::Identity(2, 2);
  const auto r2 = build_reps(two2, 2);
  REQUIRE(r2.size() == 1);
  const auto& x = r2[0].generators;
  REQUIRE(x.size() == 2);
  CHECK(x[0].rows() == 2);
  CHECK((x[0] * x[0] - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);
  CHECK((x[0] * x[1] + x[1] * x[0]).norm() < 1e-12);

  const Eigen::MatrixXcd two3 = 2.0 * Eigen::MatrixXcd::Identity(3, 3);
  const auto r3 = build_reps(two3, 3);
  REQUIRE(r3.size() == 2);
  for (const auto& r : r3) {
    CHECK(r.generators[0].rows() == 2);
    CHECK(r.residual < 1e-12);
  }
  // X1X2X3 is a scalar whose sign separates the two.
  const Eigen::MatrixXcd p0 = r3[0].generators[0] * r3[0].generators[1] * r3[0].generators[2];
  const Eigen::MatrixXcd p1 = r3[1].generators[0] * r3[1].generators[1] * r3[1].generators[2];
  CHECK((p0 + p1).norm() < 1e-12);
  CHECK(p0.norm() > 1.0);
}

TEST_CASE("representations match the profile on random forms") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto m = random_symmetric(rng, n, k);
      const auto reps = build_reps(m, k);
      const auto prof = simple_profile(k, n);
      CHECK(reps.size() == static_cast<std::size_t>(prof.simple_count));
      for (const auto& r : reps) {
        CHECK(r.generators.size() == static_cast<std::size_t>(n));
        CHECK(r.generators[0].rows() == prof.simple_dim);
        CHECK(r.residual < 1e-9);
        CHECK(anticommutator_residual(r.generators, m) == doctest::Approx(r.residual));
      }
    }
  }
}

TEST_CASE("rank 5 representations of Q on the curve") {
  const auto cp = default_curve_points()[0];
  const std::vector<ComplexF> u{{0.3, 0.1}, {-0.7, 0.2}, {0.5, -0.4}, {1.1, 0.0}, {-0.2, 0.9}};
  const auto m = q5_numeric(cp.a, cp.b, u);
  REQUIRE(symmetric_rank(m, 1e-8).rank == 5);
  const auto reps = build_reps(m, 5);
  REQUIRE(reps.size() == 2);
  for (const auto& r : reps) {
    CHECK(r.generators[0].rows() == 4);
    CHECK(r.residual < 1e-9);
  }
}

TEST_CASE("centres") {
  const auto e3 = center_data(example3_form(1));
  CHECK(e3.x_degree == 6);
  CHECK(e3.n_odd);
  const auto d = center_data(diagonal_form(5));
  CHECK(to_text(d.det) == "32 * y0 * y1 * y2 * y3 * y4");
  CHECK(center_data(q5_form(Rational(3, 2), Rational(-1, 3))).x_degree == 10);
  CHECK_FALSE(center_data(diagonal_form(4)).n_odd);
}
