#include "algtool/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "algtool/error.hpp"

namespace algtool {

void require_odd_prime(long p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::kModulus, "modulus must be an odd prime, got " + std::to_string(p));
  }
}

namespace {

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Folds a length-p vector over ω^0..ω^{p-1} into the power basis.
std::vector<Rational> reduce_full(std::vector<Rational> full, int p) {
  const Rational top = full[p - 1];
  full.resize(p - 1);
  if (sgn(top) != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

Cyclotomic::Cyclotomic(int prime) : prime_(prime) {
  require_odd_prime(prime);
  coeffs_.assign(prime - 1, Rational(0));
}

Cyclotomic::Cyclotomic(int prime, const Rational& value) : Cyclotomic(prime) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(int prime, std::vector<Rational> coeffs)
    : prime_(prime), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_raw(int prime, std::span<const Rational> raw) {
  require_odd_prime(prime);
  std::vector<Rational> full(prime, Rational(0));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (sgn(raw[k]) != 0) full[k % prime] += raw[k];
  }
  return Cyclotomic(prime, reduce_full(std::move(full), prime));
}

Cyclotomic Cyclotomic::omega_power(int prime, long k) {
  require_odd_prime(prime);
  std::vector<Rational> full(prime, Rational(0));
  full[mod(k, prime)] = 1;
  return Cyclotomic(prime, reduce_full(std::move(full), prime));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
  if (prime_ != o.prime_) {
    throw Error(ErrorCode::kPrimeMismatch, "cyclotomic operands over Q(w_" + std::to_string(prime_) +
                                               ") and Q(w_" + std::to_string(o.prime_) + ")");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same_field(o);
  for (int k = 0; k < prime_ - 1; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same_field(o);
  for (int k = 0; k < prime_ - 1; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_same_field(o);
  const int p = prime_;
  std::vector<Rational> full(p, Rational(0));
  for (int i = 0; i < p - 1; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (sgn(o.coeffs_[j]) == 0) continue;
      full[(i + j) % p] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce_full(std::move(full), p);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.prime_ == b.prime_ && a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const int p = prime_;
  if (mod(k, p) == 0) {
    throw Error(ErrorCode::kRange, "Galois exponent must be coprime to p");
  }
  std::vector<Rational> full(p, Rational(0));
  for (int j = 0; j < p - 1; ++j) {
    if (sgn(coeffs_[j]) != 0) full[mod(static_cast<long>(j) * k, p)] += coeffs_[j];
  }
  return Cyclotomic(p, reduce_full(std::move(full), p));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(prime_ - 1); }

// a^{-1} = (σ_2(a)···σ_{p-1}(a)) / N(a) with N(a) = a·σ_2(a)···σ_{p-1}(a) ∈ Q.
Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in Q(w)");
  Cyclotomic others(prime_, Rational(1));
  for (long k = 2; k < prime_; ++k) others *= galois(k);
  Cyclotomic norm = others * *this;
  if (!norm.is_rational()) {
    throw Error(ErrorCode::kInternal, "field norm is not rational");
  }
  const Rational inv = 1 / norm.rational_value();
  return others * inv;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
  Cyclotomic result(prime_, Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

ComplexF Cyclotomic::embed(long k) const {
  const long km = mod(k, prime_);
  if (km == 0) {
    throw Error(ErrorCode::kRange, "embedding exponent must be coprime to p");
  }
  double re = 0.0;
  double im = 0.0;
  for (int j = 0; j < prime_ - 1; ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * km) % prime_) / prime_;
    const double c = coeffs_[j].get_d();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

Cyclotomic cyc_normalize(int prime, std::span<const Rational> raw) {
  return Cyclotomic::from_raw(prime, raw);
}

Cyclotomic cyc_arith(CycOp kind, const Cyclotomic& a, const Cyclotomic& b) {
  switch (kind) {
    case CycOp::kAdd: return a + b;
    case CycOp::kSub: return a - b;
    case CycOp::kMul: return a * b;
    case CycOp::kDiv: return a / b;
  }
  throw Error(ErrorCode::kInternal, "unknown cyclotomic operation");
}

Cyclotomic cyc_conjugate(const Cyclotomic& a) { return a.conjugate(); }

ComplexF cyc_embed(const Cyclotomic& a, long k) { return a.embed(k); }

}  // namespace algtool
