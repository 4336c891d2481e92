#include <doctest.h>

#include "algtool/error.hpp"
#include "algtool/graded.hpp"
#include "algtool/koszul.hpp"

using namespace algtool;

namespace {

Presentation pres(const std::string& kind, int p, std::vector<Rational> params = {}) {
  return make_presentation(kind, p, params);
}

std::vector<long> powers(int p, int n) {
  std::vector<long> out{1};
  for (int k = 1; k <= n; ++k) out.push_back(out.back() * p);
  return out;
}

// Multiplicity of each irreducible in A_n, from the class sums.
std::vector<Cyclotomic> multiplicities(GradedEngine& eng, int n) {
  const int p = eng.presentation().p;
  const auto cs = conjugacy_classes(p);
  std::vector<SimpleRep> irreps;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) irreps.push_back(SimpleRep::character(p, a, b));
  for (long i = 1; i < p; ++i) irreps.push_back(SimpleRep::standard(p, i));
  std::vector<Cyclotomic> chi;
  for (const auto& c : cs) chi.push_back(eng.character_coeffs(c.rep, SimpleRep::standard(p, 1), n)[static_cast<std::size_t>(n)]);
  std::vector<Cyclotomic> out;
  for (const auto& w : irreps) {
    Cyclotomic s(p);
    for (std::size_t k = 0; k < cs.size(); ++k) s += chi[k] * character(w, cs[k].rep).conjugate() * Rational(cs[k].size);
    out.push_back(s * Rational(1, p * p * p));
  }
  return out;
}

}  // namespace

// Expected values below were produced by an independent dense modular-rank computation.
TEST_CASE("Hilbert series fixtures") {
  CHECK(hilbert(pres("polynomial", 3), 5) == std::vector<long>{1, 3, 6, 10, 15, 21});
  CHECK(hilbert(pres("polynomial", 5), 4) == std::vector<long>{1, 5, 15, 35, 70});
  CHECK(hilbert(pres("cycle", 5), 4) == std::vector<long>{1, 5, 10, 15, 20});
  CHECK(hilbert(pres("sklyanin3", 3, {1, 1, -1}), 5) == std::vector<long>{1, 3, 6, 10, 15, 21});
  CHECK(hilbert(pres("sklyanin3", 3, {1, 2, 3}), 4) == std::vector<long>{1, 3, 6, 10, 15});
  CHECK(hilbert(pres("curveCa", 5, {1}), 4) == std::vector<long>{1, 5, 10, 15, 20});
  CHECK(hilbert(pres("cliffordC", 5, {1, 2, 3}), 4) == std::vector<long>{1, 5, 15, 35, 70});
  CHECK(hilbert(pres("sklyanin5", 5, {Rational(3, 2), Rational(-1, 3)}), 3) == std::vector<long>{1, 5, 15, 35});
}

TEST_CASE("free algebra and a single commutator") {
  const auto free = presentation_from_relations("free", 3, {});
  CHECK(hilbert(free, 4) == powers(3, 4));
  Relation r;
  r.add({0, 1}, 3, 1);
  r.add({1, 0}, 3, -1);
  const auto one = presentation_from_relations("one", 3, {r});
  // T(V)/(x0x1 - x1x0): dimensions 1, 3, 8, 21, 55 (every n: 3·h_{n-1} - h_{n-2}).
  CHECK(hilbert(one, 4) == std::vector<long>{1, 3, 8, 21, 55});
}

TEST_CASE("presentation argument errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  CHECK(code([] { pres("nope", 3); }) == ErrorCode::kUsage);
  CHECK(code([] { pres("sklyanin3", 3, {1, 2}); }) == ErrorCode::kArity);
  CHECK(code([] { pres("cliffordC", 5, {0, 0, 0}); }) == ErrorCode::kRange);
  CHECK(code([] { pres("cycle", 3); }) == ErrorCode::kModulus);
  CHECK(code([] { pres("polynomial", 9); }) == ErrorCode::kModulus);
  CHECK(code([] { hilbert(pres("polynomial", 3), -1); }) == ErrorCode::kRange);
}

TEST_CASE("resource cap") {
  CHECK(max_cells() > 0);
  CHECK(cell_estimate(5, 3) == doctest::Approx(3125.0));
  set_max_cells(100.0);
  CHECK_THROWS_AS(hilbert(pres("polynomial", 5), 3), Error);
  set_max_cells(-1.0);
  CHECK(hilbert(pres("polynomial", 5), 3).back() == 35);
}

TEST_CASE("echelon pieces are reduced") {
  const auto piece = ideal_piece(pres("sklyanin3", 3, {1, 2, 3}), 3);
  CHECK(piece.ideal_rank + piece.quotient_dim == 27);
  CHECK(piece.quotient_dim == 10);
  for (std::size_t r = 0; r < piece.rows.size(); ++r) {
    REQUIRE(piece.entry(r, piece.pivots[r]) != nullptr);
    CHECK(*piece.entry(r, piece.pivots[r]) == 1);
    for (std::size_t s = 0; s < piece.rows.size(); ++s) {
      if (s != r) CHECK(piece.entry(s, piece.pivots[r]) == nullptr);
    }
    if (r > 0) CHECK(piece.pivots[r - 1] < piece.pivots[r]);
  }
}

TEST_CASE("ideal and quotient traces are complementary") {
  for (const auto& p : {pres("sklyanin3", 3, {2, -1, 5}), pres("cycle", 5), pres("cliffordC", 5, {1, 2, 3})}) {
    GradedEngine eng(p);
    const auto rep = SimpleRep::standard(p.p, 1);
    const int top = p.p == 3 ? 4 : 3;
    for (const auto& c : conjugacy_classes(p.p)) {
      const auto coeffs = eng.character_coeffs(c.rep, rep, top);
      for (int n = 0; n <= top; ++n) CHECK(coeffs[static_cast<std::size_t>(n)] == eng.quotient_trace(c.rep, rep, n));
    }
  }
}

TEST_CASE("Ch(1) is the Hilbert series and Ch(z) is w^n times it") {
  GradedEngine eng(pres("cliffordC", 5, {1, 2, 3}));
  const auto rep = SimpleRep::standard(5, 1);
  const auto h = eng.hilbert(3);
  const auto one = eng.character_coeffs(HeisenbergElement::identity(5), rep, 3);
  const auto z = eng.character_coeffs(HeisenbergElement::z(5), rep, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(one[static_cast<std::size_t>(n)] == Cyclotomic(5, h[static_cast<std::size_t>(n)]));
    CHECK(z[static_cast<std::size_t>(n)] == Cyclotomic::omega_power(5, n) * Rational(h[static_cast<std::size_t>(n)]));
  }
}

TEST_CASE("graded pieces are genuine representations") {
  for (const auto& p : {pres("cycle", 5), pres("sklyanin3", 3, {1, 2, 3})}) {
    GradedEngine eng(p);
    for (int n = 1; n <= 3; ++n) {
      for (const auto& m : multiplicities(eng, n)) {
        REQUIRE(m.is_rational());
        CHECK(m.rational_value() >= 0);
        CHECK(m.rational_value().get_den() == 1);
      }
    }
  }
}

TEST_CASE("character table of the polynomial ring at p = 3") {
  const auto t = character_table(pres("polynomial", 3), SimpleRep::standard(3, 1), 3);
  REQUIRE(t.rows.size() == 11);
  const std::vector<Cyclotomic> e1{Cyclotomic(3, 1), Cyclotomic(3), Cyclotomic(3), Cyclotomic(3, 1)};
  for (std::size_t i = 3; i < 11; ++i) CHECK(t.rows[i] == e1);
  // Sklyanin algebras at regular points have the same table.
  CHECK(character_table(pres("sklyanin3", 3, {1, 2, 3}), SimpleRep::standard(3, 1), 3) == t);
}

TEST_CASE("unstable relations are refused") {
  Relation r;
  r.add({0, 1}, 3, 1);
  const auto p = presentation_from_relations("x0x1", 3, {r});
  GradedEngine eng(p);
  CHECK_FALSE(eng.is_stable(HeisenbergElement::e1(3), SimpleRep::standard(3, 1)));
  CHECK_THROWS_AS(eng.character_coeffs(HeisenbergElement::e1(3), SimpleRep::standard(3, 1), 2), Error);
}

TEST_CASE("quadratic duals") {
  const auto pair = quadratic_dual(pres("polynomial", 3));
  for (const auto& row : pair.evaluation)
    for (const auto& x : row) CHECK(x == 0);
  // The dual of the polynomial ring is the exterior algebra.
  CHECK(hilbert(pair.dual, 4) == std::vector<long>{1, 3, 3, 1, 0});
  const auto cyc = quadratic_dual(pres("cycle", 5));
  CHECK(cyc.relation_basis.size() + cyc.dual_basis.size() == 25);
  Relation cubic;
  cubic.degree = 3;
  cubic.add({0, 0, 0}, 3, 1);
  CHECK_THROWS_AS(quadratic_dual(presentation_from_relations("cubic", 3, {cubic})), Error);
}

TEST_CASE("Koszul identity for the polynomial ring on every class") {
  for (int p : {3, 5}) {
    const auto poly = pres("polynomial", p);
    for (const auto& c : conjugacy_classes(p)) {
      for (const auto& x : koszul_identity_check(poly, SimpleRep::standard(p, 1), c.rep, p == 3 ? 4 : 3)) {
        CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("Koszul identity for a Sklyanin algebra") {
  const auto s = pres("sklyanin3", 3, {1, 2, 3});
  for (const auto& g : {HeisenbergElement::identity(3), HeisenbergElement::z(3), HeisenbergElement::e1(3)}) {
    for (const auto& x : koszul_identity_check(s, SimpleRep::standard(3, 1), g, 4)) CHECK(x.is_zero());
  }
}

TEST_CASE("Koszul identity for Clifford-type algebras on every class") {
  for (const auto& pr : {pres("cliffordC", 5, {1, 2, 3}), pres("cliffordC", 3, {1, 2}), pres("sklyanin3", 3, {2, -1, 5})}) {
    const auto pair = quadratic_dual(pr);
    GradedEngine a(pr);
    GradedEngine d(pair.dual);
    for (const auto& c : conjugacy_classes(pr.p)) {
      for (const auto& x : koszul_residual(a, d, SimpleRep::standard(pr.p, 1), c.rep, 4)) CHECK(x.is_zero());
    }
    // A^! of a PBW-like quadratic algebra on p generators: binomial dimensions.
    if (pr.p == 5) CHECK(d.hilbert(5) == std::vector<long>{1, 5, 10, 10, 5, 1});
  }
}
