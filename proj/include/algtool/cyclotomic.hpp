#pragma once

#include <span>
#include <vector>

#include "algtool/rational.hpp"

namespace algtool {

/// Element of Q(ω) for ω a primitive p-th root of unity, p an odd prime.
///
/// Stored in the power basis 1, ω, …, ω^{p-2}; this is the unique reduction
/// modulo 1 + ω + … + ω^{p-1}. Values are immutable once built.
class Cyclotomic {
 public:
  /// Zero of Q(ω_p).
  explicit Cyclotomic(int prime);
  Cyclotomic(int prime, const Rational& value);

  /// Canonical reduction of Σ raw[k] ω^k (any length).
  static Cyclotomic from_raw(int prime, std::span<const Rational> raw);
  static Cyclotomic omega_power(int prime, long k);

  int prime() const { return prime_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value of a rational element; only meaningful when is_rational().
  Rational rational_value() const { return coeffs_[0]; }

  /// Image under ω ↦ ω^{p-1}, i.e. complex conjugation.
  Cyclotomic conjugate() const;
  /// Image under ω ↦ ω^k for k coprime to p.
  Cyclotomic galois(long k) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(unsigned long e) const;

  /// Numeric value under ω ↦ exp(2πik/p).
  ComplexF embed(long k = 1) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int prime, std::vector<Rational> coeffs);
  void check_same_field(const Cyclotomic& o) const;

  int prime_;
  std::vector<Rational> coeffs_;
};

/// Checks that p is an odd prime, throwing ErrorCode::kModulus otherwise.
void require_odd_prime(long p);

enum class CycOp { kAdd, kSub, kMul, kDiv };

Cyclotomic cyc_normalize(int prime, std::span<const Rational> raw);
Cyclotomic cyc_arith(CycOp kind, const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_conjugate(const Cyclotomic& a);
ComplexF cyc_embed(const Cyclotomic& a, long k);

}  // namespace algtool
