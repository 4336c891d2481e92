#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "algtool/error.hpp"
#include "algtool/field.hpp"

namespace algtool {

/// Exponent vector; its length is the ambient variable count.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded-lex "greater": higher total degree first, then lexicographic with
/// x0 > x1 > ... . A std::map keyed with this iterates in serialization order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Named variable list shared by all polynomials of one ring.
class Ring {
 public:
  Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  /// prefix0, prefix1, ...
  static Ring indexed(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Ring(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) throw Error(ErrorCode::kRange, "no variable named '" + name + "'");
    return static_cast<std::size_t>(it - names_->begin());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial; zero coefficients are never stored.
template <class S>
class MultiPoly {
 public:
  using Scalar = S;
  using Terms = std::map<Monomial, S, GrlexGreater>;

  explicit MultiPoly(Ring ring, Field<S> field = {}) : ring_(std::move(ring)), field_(field) {}

  static MultiPoly constant(const Ring& ring, const Field<S>& field, const S& c) {
    MultiPoly f(ring, field);
    f.add_term(Monomial(ring.size(), 0), c);
    return f;
  }
  static MultiPoly variable(const Ring& ring, const Field<S>& field, std::size_t var) {
    Monomial m(ring.size(), 0);
    m.at(var) = 1;
    return term(ring, field, std::move(m), field.one());
  }
  static MultiPoly term(const Ring& ring, const Field<S>& field, Monomial m, const S& c) {
    if (m.size() != ring.size()) throw Error(ErrorCode::kArity, "monomial length differs from variable count");
    MultiPoly f(ring, field);
    f.add_term(m, c);
    return f;
  }

  const Ring& ring() const { return ring_; }
  const Field<S>& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_vars() const { return ring_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const S& c) {
    if (Field<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Field<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : algtool::total_degree(terms_.begin()->first);
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [m, c] : terms_) {
      if (algtool::total_degree(m) != d) return false;
    }
    return true;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const S& s) {
    if (Field<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const S& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.ring_, a.field_);
    Monomial m(a.num_vars());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  void check_compatible(const MultiPoly& o) const {
    if (!(ring_ == o.ring_)) throw Error(ErrorCode::kRingMismatch, "polynomials live in different rings");
    if (!(field_ == o.field_)) throw Error(ErrorCode::kPrimeMismatch, "polynomials have different coefficient fields");
  }

 private:
  Ring ring_;
  Field<S> field_;
  Terms terms_;
};

enum class PolyOp { kAdd, kSub, kMul };

template <class S>
MultiPoly<S> poly_arith(PolyOp kind, const MultiPoly<S>& f, const MultiPoly<S>& g) {
  switch (kind) {
    case PolyOp::kAdd: return f + g;
    case PolyOp::kSub: return f - g;
    case PolyOp::kMul: return f * g;
  }
  throw Error(ErrorCode::kInternal, "unknown polynomial operation");
}

template <class S>
MultiPoly<S> pow(const MultiPoly<S>& f, unsigned e) {
  auto r = MultiPoly<S>::constant(f.ring(), f.field(), f.field().one());
  for (unsigned k = 0; k < e; ++k) r *= f;
  return r;
}

template <class S>
MultiPoly<S> poly_partial(const MultiPoly<S>& f, std::size_t var) {
  if (var >= f.num_vars()) throw Error(ErrorCode::kRange, "partial derivative variable out of range");
  MultiPoly<S> r(f.ring(), f.field());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, scale(c, m[var]));
  }
  return r;
}

template <class T>
T unit_like(std::span<const T> point) {
  if constexpr (std::is_same_v<T, Cyclotomic>) {
    if (point.empty()) throw Error(ErrorCode::kArity, "cannot infer the cyclotomic field of an empty point");
    return Cyclotomic(point[0].prime(), Rational(1));
  } else {
    return T(1);
  }
}

/// Evaluation at a point of scalar kind T; coefficients are coerced into T.
template <class S, class T>
T poly_eval(const MultiPoly<S>& f, std::span<const T> point) {
  const std::size_t n = f.num_vars();
  if (point.size() != n) {
    throw Error(ErrorCode::kArity, "point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                       std::to_string(n) + " variables");
  }
  if constexpr (std::is_same_v<T, ComplexF> || std::is_same_v<T, double>) {
    for (const auto& x : point) {
      if (!std::isfinite(std::abs(x))) throw Error(ErrorCode::kRange, "non-finite evaluation point");
    }
  }
  const T one = unit_like(point);
  std::vector<std::vector<T>> powers(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int d = f.degree_in(v);
    powers[v].reserve(static_cast<std::size_t>(std::max(d, 0)) + 1);
    powers[v].push_back(one);
    for (int e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * point[v]);
  }
  T acc = one - one;
  for (const auto& [m, c] : f.terms()) {
    T term = coerce(c, one);
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] != 0) term = term * powers[v][m[v]];
    }
    acc += term;
  }
  return acc;
}

/// Coefficient of var^k, as a polynomial in the same ring with var absent.
template <class S>
MultiPoly<S> coefficient_in(const MultiPoly<S>& f, std::size_t var, int k) {
  MultiPoly<S> r(f.ring(), f.field());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] != k) continue;
    Monomial d = m;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

/// Re-expresses f (which must not involve `var`) in the ring without `var`.
template <class S>
MultiPoly<S> drop_variable(const MultiPoly<S>& f, std::size_t var, const Ring& target) {
  if (target.size() + 1 != f.num_vars()) throw Error(ErrorCode::kArity, "target ring size mismatch");
  MultiPoly<S> r(target, f.field());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] != 0) throw Error(ErrorCode::kRange, "polynomial still involves the dropped variable");
    Monomial d;
    d.reserve(target.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (v != var) d.push_back(m[v]);
    }
    r.add_term(d, c);
  }
  return r;
}

/// Coefficient-wise conversion into another scalar kind.
template <class T, class S, class Fn>
MultiPoly<T> map_coeffs(const MultiPoly<S>& f, const Field<T>& field, Fn fn) {
  MultiPoly<T> r(f.ring(), field);
  for (const auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

/// All degree-d monomials in n variables, in serialization (descending grlex) order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

/// Coefficients of a homogeneous f against a monomial basis; throws if a term is missing.
template <class S>
std::vector<S> coefficient_vector(const MultiPoly<S>& f, const std::vector<Monomial>& basis,
                                  const std::map<Monomial, std::size_t, GrlexGreater>& index) {
  std::vector<S> v(basis.size(), f.field().zero());
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw Error(ErrorCode::kRange, "polynomial term outside the monomial basis");
    v[it->second] = c;
  }
  return v;
}

inline std::map<Monomial, std::size_t, GrlexGreater> monomial_index(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, GrlexGreater> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

/// Exact quotient f/g, or nullopt when g does not divide f.
///
/// Leading-term division in the lex order that ranks the first variable of g
/// above all others; the result is always re-multiplied and checked.
template <class S>
std::optional<MultiPoly<S>> exact_divide(const MultiPoly<S>& f, const MultiPoly<S>& g) {
  static_assert(Field<S>::kExact, "exact_divide needs an exact coefficient field");
  f.check_compatible(g);
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "exact_divide by the zero polynomial");
  const std::size_t n = f.num_vars();
  std::size_t main = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree_in(v) > 0) {
      main = v;
      break;
    }
  }
  auto greater = [main](const Monomial& a, const Monomial& b) {
    if (a[main] != b[main]) return a[main] > b[main];
    return a > b;
  };
  using Work = std::map<Monomial, S, decltype(greater)>;
  Work rem(greater);
  for (const auto& [m, c] : f.terms()) rem.emplace(m, c);
  Work gw(greater);
  for (const auto& [m, c] : g.terms()) gw.emplace(m, c);
  const Monomial& lm = gw.begin()->first;
  const S lc_inv = S(f.field().one()) / gw.begin()->second;

  MultiPoly<S> q(f.ring(), f.field());
  Monomial shift(n);
  while (!rem.empty()) {
    const auto& [m, c] = *rem.begin();
    for (std::size_t v = 0; v < n; ++v) {
      shift[v] = m[v] - lm[v];
      if (shift[v] < 0) return std::nullopt;
    }
    const S factor = c * lc_inv;
    q.add_term(shift, factor);
    Monomial prod(n);
    for (const auto& [gm, gc] : gw) {
      for (std::size_t v = 0; v < n; ++v) prod[v] = gm[v] + shift[v];
      S delta = -(factor * gc);
      auto it = rem.find(prod);
      if (it == rem.end()) {
        rem.emplace(prod, delta);
      } else {
        it->second += delta;
        if (Field<S>::is_zero(it->second)) rem.erase(it);
      }
    }
  }
  if (!(q * g == f)) throw Error(ErrorCode::kInternal, "exact_divide verification failed");
  return q;
}

std::string scalar_text(const Rational& c);
std::string scalar_text(const Cyclotomic& c);
std::string scalar_text(double c);
std::string scalar_text(const ComplexF& c);

/// "c * x0^2 * x1 + ..." in graded-lex order; "0" for the zero polynomial.
template <class S>
std::string to_text(const MultiPoly<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    out += scalar_text(c);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      out += " * " + f.ring().name(v);
      if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
  }
  return out;
}

}  // namespace algtool
