#include <doctest.h>

#include <random>

#include "algtool/cyclotomic.hpp"
#include "algtool/error.hpp"
#include "algtool/rational.hpp"

using namespace algtool;

namespace {

Cyclotomic random_cyc(std::mt19937_64& rng, int p) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rational> raw;
  for (int k = 0; k < p; ++k) raw.emplace_back(num(rng), den(rng));
  for (auto& q : raw) q.canonicalize();
  return Cyclotomic::from_raw(p, raw);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("parse_rational reads integers, fractions and decimals exactly") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-2.5") == Rational(-5, 2));
  CHECK(to_string(parse_rational("10/2")) == "5");
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::kDivisionByZero);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("only odd primes define a cyclotomic field") {
  CHECK(code_of([] { Cyclotomic(4); }) == ErrorCode::kModulus);
  CHECK(code_of([] { Cyclotomic(2); }) == ErrorCode::kModulus);
  CHECK_NOTHROW(Cyclotomic(7));
}

TEST_CASE("powers of omega") {
  for (int p : {3, 5, 7}) {
    const auto w = Cyclotomic::omega_power(p, 1);
    CHECK(w.pow(static_cast<unsigned long>(p)).is_one());
    CHECK_FALSE(w.is_rational());
    Cyclotomic sum(p);
    for (int k = 0; k < p; ++k) sum += Cyclotomic::omega_power(p, k);
    CHECK(sum.is_zero());
    CHECK(Cyclotomic::omega_power(p, -1) == w.conjugate());
    CHECK(Cyclotomic::omega_power(p, p + 2) == Cyclotomic::omega_power(p, 2));
    CHECK(std::abs(w.embed() - std::polar(1.0, 2 * M_PI / p)) < 1e-14);
  }
}

TEST_CASE("field axioms on random elements of Q(w5) and Q(w7)") {
  std::mt19937_64 rng(11);
  for (int p : {5, 7}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_cyc(rng, p), b = random_cyc(rng, p), c = random_cyc(rng, p);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == Cyclotomic(p));
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
      CHECK(std::abs((a * b).embed(3) - a.embed(3) * b.embed(3)) < 1e-9);
    }
  }
}

TEST_CASE("arithmetic errors") {
  CHECK(code_of([] { return Cyclotomic(5).inverse(); }) == ErrorCode::kDivisionByZero);
  CHECK(code_of([] { return Cyclotomic(5, 1) + Cyclotomic(3, 1); }) == ErrorCode::kPrimeMismatch);
}

TEST_CASE("norm of 1 - w is p") {
  for (int p : {3, 5, 7, 11}) {
    const auto x = Cyclotomic(p, 1) - Cyclotomic::omega_power(p, 1);
    Cyclotomic norm(p, 1);
    for (int k = 1; k < p; ++k) norm *= x.galois(k);
    REQUIRE(norm.is_rational());
    CHECK(norm.rational_value() == p);
  }
}

TEST_CASE("rational approximation and primality") {
  CHECK(rational_approximation(0.3333333333, 100) == Rational(1, 3));
  CHECK(rational_approximation(-1.25, 10) == Rational(-5, 4));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
