#include <doctest.h>

#include <set>

#include "algtool/error.hpp"
#include "algtool/heisenberg.hpp"

using namespace algtool;

namespace {

std::vector<HeisenbergElement> all_elements(int p) {
  std::vector<HeisenbergElement> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int k = 0; k < p; ++k) out.push_back(HeisenbergElement::make(p, a, b, k));
  return out;
}

DenseMatrix<Cyclotomic> mat_mul(const DenseMatrix<Cyclotomic>& x, const DenseMatrix<Cyclotomic>& y) {
  const int p = x[0][0].prime();
  DenseMatrix<Cyclotomic> out(x.size(), std::vector<Cyclotomic>(y[0].size(), Cyclotomic(p)));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k)
      for (std::size_t j = 0; j < y[0].size(); ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

}  // namespace

TEST_CASE("group law") {
  for (int p : {3, 5}) {
    const auto e1 = HeisenbergElement::e1(p), e2 = HeisenbergElement::e2(p), z = HeisenbergElement::z(p);
    CHECK(h_mul(e1, e2) == h_mul(z, h_mul(e2, e1)));
    CHECK(h_pow(e1, p) == HeisenbergElement::identity(p));
    CHECK(h_pow(z, p) == HeisenbergElement::identity(p));
    const auto all = all_elements(p);
    for (std::size_t i = 0; i < all.size(); i += 7) {
      const auto& g = all[i];
      CHECK(h_mul(g, h_inverse(g)) == HeisenbergElement::identity(p));
      CHECK(h_mul(g, z) == h_mul(z, g));
      for (std::size_t j = 0; j < all.size(); j += 11) {
        const auto& h = all[j];
        const auto& k = all[(i + j) % all.size()];
        CHECK(h_mul(h_mul(g, h), k) == h_mul(g, h_mul(h, k)));
      }
    }
  }
}

TEST_CASE("element names round-trip") {
  for (const auto& g : all_elements(5)) CHECK(h_parse(5, h_name(g)) == g);
  CHECK(h_name(HeisenbergElement::identity(3)) == "1");
  CHECK(h_name(HeisenbergElement::make(5, 1, 2, 3)) == "e1 e2^2 z^3");
  CHECK(h_parse(3, "z^2") == HeisenbergElement::make(3, 0, 0, 2));
  CHECK_THROWS_AS(h_parse(3, "e3"), Error);
}

TEST_CASE("p^2 + p - 1 conjugacy classes whose sizes sum to p^3") {
  for (int p : {3, 5, 7}) {
    const auto cs = conjugacy_classes(p);
    CHECK(cs.size() == static_cast<std::size_t>(p * p + p - 1));
    long total = 0;
    for (const auto& c : cs) total += c.size;
    CHECK(total == p * p * p);
    // Central classes first.
    for (int k = 0; k < p; ++k) CHECK(cs[static_cast<std::size_t>(k)].rep.is_central());
  }
}

TEST_CASE("V_i is a representation with central character w^i") {
  for (int p : {3, 5}) {
    for (long i = 1; i < p; ++i) {
      const auto v = SimpleRep::standard(p, i);
      const auto all = all_elements(p);
      for (std::size_t s = 0; s < all.size(); s += 5) {
        const auto& g = all[s];
        const auto& h = all[(s * 3 + 1) % all.size()];
        CHECK(mat_mul(rep_matrix(v, g), rep_matrix(v, h)) == rep_matrix(v, h_mul(g, h)));
      }
      CHECK(character(v, HeisenbergElement::z(p)) == Cyclotomic::omega_power(p, i) * Rational(p));
      CHECK(character(v, HeisenbergElement::e1(p)).is_zero());
    }
  }
}

TEST_CASE("character orthogonality over all irreducibles") {
  const int p = 3;
  std::vector<SimpleRep> reps;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) reps.push_back(SimpleRep::character(p, a, b));
  for (long i = 1; i < p; ++i) reps.push_back(SimpleRep::standard(p, i));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const auto ip = character_inner_product(reps[i], reps[j]);
      CHECK(ip == Cyclotomic(p, i == j ? p * p * p : 0));
    }
  }
}

TEST_CASE("fixed points of cyclic subgroups in P(V_1)") {
  CHECK(cyclic_subgroup_generators(5).size() == 6);
  const auto v = SimpleRep::standard(5, 1);
  const auto pts = all_fixed_points(v);
  CHECK(pts.size() == 30);
  std::set<std::vector<std::vector<std::string>>> seen;
  for (const auto& pt : pts) {
    // First nonzero coordinate normalised to 1.
    auto it = std::find_if(pt.begin(), pt.end(), [](const Cyclotomic& c) { return !c.is_zero(); });
    REQUIRE(it != pt.end());
    CHECK(it->is_one());
    std::vector<std::vector<std::string>> key;
    for (const auto& c : pt) {
      std::vector<std::string> row;
      for (const auto& q : c.coeffs()) row.push_back(to_string(q));
      key.push_back(row);
    }
    seen.insert(key);
  }
  CHECK(seen.size() == 30);
  for (const auto& g : cyclic_subgroup_generators(5)) CHECK(projective_fixed_points(v, g).size() == 5);
}
