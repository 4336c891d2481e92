#pragma once

#include <cmath>
#include <string>

#include "algtool/cyclotomic.hpp"
#include "algtool/rational.hpp"

namespace algtool {

/// Coefficient-field context. Exact fields compare with ==; float fields keep
/// exact zeros out of sparse storage but never round.
template <class S>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool kExact = true;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_rational(const Rational& q) const { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string tag() { return "Q"; }
  bool operator==(const Field&) const = default;
};

template <>
struct Field<Cyclotomic> {
  static constexpr bool kExact = true;
  int prime = 3;
  Cyclotomic zero() const { return Cyclotomic(prime); }
  Cyclotomic one() const { return Cyclotomic(prime, Rational(1)); }
  Cyclotomic from_rational(const Rational& q) const { return Cyclotomic(prime, q); }
  static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
  std::string tag() const { return "Q(w" + std::to_string(prime) + ")"; }
  bool operator==(const Field&) const = default;
};

template <>
struct Field<double> {
  static constexpr bool kExact = false;
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double from_rational(const Rational& q) const { return q.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
  static std::string tag() { return "R"; }
  bool operator==(const Field&) const = default;
};

template <>
struct Field<ComplexF> {
  static constexpr bool kExact = false;
  ComplexF zero() const { return {0.0, 0.0}; }
  ComplexF one() const { return {1.0, 0.0}; }
  ComplexF from_rational(const Rational& q) const { return {q.get_d(), 0.0}; }
  static bool is_zero(const ComplexF& x) { return x == ComplexF(0.0, 0.0); }
  static std::string tag() { return "C"; }
  bool operator==(const Field&) const = default;
};

// Coefficient coercion into the scalar kind of `like` (ℚ ⊂ ℚ(ω), ℚ(ω) → ℂ via ω ↦ e^{2πi/p}).
inline Rational coerce(const Rational& c, const Rational&) { return c; }
inline Cyclotomic coerce(const Rational& c, const Cyclotomic& like) { return Cyclotomic(like.prime(), c); }
inline double coerce(const Rational& c, double) { return c.get_d(); }
inline ComplexF coerce(const Rational& c, const ComplexF&) { return {c.get_d(), 0.0}; }
inline Cyclotomic coerce(const Cyclotomic& c, const Cyclotomic&) { return c; }
inline ComplexF coerce(const Cyclotomic& c, const ComplexF&) { return c.embed(1); }
inline double coerce(double c, double) { return c; }
inline ComplexF coerce(double c, const ComplexF&) { return {c, 0.0}; }
inline ComplexF coerce(const ComplexF& c, const ComplexF&) { return c; }

// Integer multiples, without promoting the integer into the field first.
inline Rational scale(const Rational& c, long e) { return c * Rational(e); }
inline Cyclotomic scale(const Cyclotomic& c, long e) { return c * Rational(e); }
inline double scale(double c, long e) { return c * static_cast<double>(e); }
inline ComplexF scale(const ComplexF& c, long e) { return c * static_cast<double>(e); }

}  // namespace algtool
