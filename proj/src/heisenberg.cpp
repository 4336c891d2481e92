#include "algtool/heisenberg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "algtool/error.hpp"

namespace algtool {

namespace {

int mod(long x, int p) {
  const long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void same_group(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.p != h.p) {
    throw Error(ErrorCode::kPrimeMismatch,
                "elements of H_" + std::to_string(g.p) + " and H_" + std::to_string(h.p));
  }
}

void require_standard(const SimpleRep& rep) {
  if (rep.linear) throw Error(ErrorCode::kRange, "operation needs a p-dimensional representation");
}

}  // namespace

HeisenbergElement HeisenbergElement::make(int p, long a, long b, long k) {
  require_odd_prime(p);
  return HeisenbergElement{p, mod(a, p), mod(b, p), mod(k, p)};
}

// e2^b e1^c = e1^c e2^b z^{-bc}.
HeisenbergElement h_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  same_group(g, h);
  return HeisenbergElement::make(g.p, g.a + h.a, g.b + h.b, static_cast<long>(g.k) + h.k - static_cast<long>(g.b) * h.a);
}

HeisenbergElement h_inverse(const HeisenbergElement& g) {
  // (e1^a e2^b z^k)^{-1} = e1^{-a} e2^{-b} z^{-k-ab}.
  return HeisenbergElement::make(g.p, -g.a, -g.b, -static_cast<long>(g.k) - static_cast<long>(g.a) * g.b);
}

HeisenbergElement h_pow(const HeisenbergElement& g, long n) {
  HeisenbergElement base = n < 0 ? h_inverse(g) : g;
  long e = n < 0 ? -n : n;
  HeisenbergElement r = HeisenbergElement::identity(g.p);
  while (e > 0) {
    if (e & 1) r = h_mul(r, base);
    base = h_mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string h_name(const HeisenbergElement& g) {
  std::string out;
  auto part = [&](const char* sym, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += sym;
    if (e > 1) out += "^" + std::to_string(e);
  };
  part("e1", g.a);
  part("e2", g.b);
  part("z", g.k);
  return out.empty() ? "1" : out;
}

HeisenbergElement h_parse(int p, const std::string& text) {
  long a = 0, b = 0, k = 0;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    long e = 1;
    std::string sym = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      sym = tok.substr(0, caret);
      try {
        e = std::stol(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kUsage, "bad exponent in group element '" + text + "'");
      }
    }
    if (sym == "e1") a += e;
    else if (sym == "e2") b += e;
    else if (sym == "z") k += e;
    else throw Error(ErrorCode::kUsage, "cannot parse group element '" + text + "'");
  }
  // Tokens are read in normal-form order e1, e2, z; reordering is not supported.
  return HeisenbergElement::make(p, a, b, k);
}

SimpleRep SimpleRep::standard(int p, long i) {
  require_odd_prime(p);
  const int im = mod(i, p);
  if (im == 0) throw Error(ErrorCode::kRange, "representation index must be coprime to p");
  return SimpleRep{p, im, false, 0, 0};
}

SimpleRep SimpleRep::character(int p, long a, long b) {
  require_odd_prime(p);
  return SimpleRep{p, 0, true, mod(a, p), mod(b, p)};
}

DenseMatrix<Cyclotomic> rep_matrix(const SimpleRep& rep, const HeisenbergElement& g) {
  if (rep.p != g.p) throw Error(ErrorCode::kPrimeMismatch, "representation and element of different H_p");
  const int p = rep.p;
  if (rep.linear) {
    return {{Cyclotomic::omega_power(p, static_cast<long>(rep.a) * g.a + static_cast<long>(rep.b) * g.b)}};
  }
  DenseMatrix<Cyclotomic> m(p, std::vector<Cyclotomic>(p, Cyclotomic(p)));
  for (int j = 0; j < p; ++j) {
    m[mod(j - g.a, p)][j] = Cyclotomic::omega_power(p, static_cast<long>(rep.index) * (static_cast<long>(g.b) * j + g.k));
  }
  return m;
}

Cyclotomic character(const SimpleRep& rep, const HeisenbergElement& g) {
  if (rep.p != g.p) throw Error(ErrorCode::kPrimeMismatch, "representation and element of different H_p");
  if (rep.linear) return Cyclotomic::omega_power(rep.p, static_cast<long>(rep.a) * g.a + static_cast<long>(rep.b) * g.b);
  if (!g.is_central()) return Cyclotomic(rep.p);
  return Cyclotomic::omega_power(rep.p, static_cast<long>(rep.index) * g.k) * Rational(rep.p);
}

std::vector<Cyclotomic> rep_apply(const SimpleRep& rep, const HeisenbergElement& g, const std::vector<Cyclotomic>& v) {
  require_standard(rep);
  const int p = rep.p;
  if (static_cast<int>(v.size()) != p) throw Error(ErrorCode::kArity, "vector length differs from p");
  std::vector<Cyclotomic> out(p, Cyclotomic(p));
  for (int j = 0; j < p; ++j) {
    out[mod(j - g.a, p)] = v[j] * Cyclotomic::omega_power(p, static_cast<long>(rep.index) * (static_cast<long>(g.b) * j + g.k));
  }
  return out;
}

std::vector<ComplexF> rep_apply(const SimpleRep& rep, const HeisenbergElement& g, const std::vector<ComplexF>& v) {
  require_standard(rep);
  const int p = rep.p;
  if (static_cast<int>(v.size()) != p) throw Error(ErrorCode::kArity, "vector length differs from p");
  std::vector<ComplexF> out(p);
  for (int j = 0; j < p; ++j) {
    const int e = mod(static_cast<long>(rep.index) * (static_cast<long>(g.b) * j + g.k), p);
    const double ang = 2.0 * std::numbers::pi * e / p;
    out[mod(j - g.a, p)] = v[j] * ComplexF(std::cos(ang), std::sin(ang));
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int p) {
  require_odd_prime(p);
  std::vector<ConjugacyClass> out;
  for (int k = 0; k < p; ++k) out.push_back({HeisenbergElement::make(p, 0, 0, k), 1});
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      out.push_back({HeisenbergElement::make(p, a, b, 0), p});
    }
  }
  return out;
}

Cyclotomic character_inner_product(const SimpleRep& v, const SimpleRep& w) {
  if (v.p != w.p) throw Error(ErrorCode::kPrimeMismatch, "representations of different H_p");
  Cyclotomic acc(v.p);
  for (const auto& c : conjugacy_classes(v.p)) {
    acc += character(v, c.rep) * character(w, c.rep).conjugate() * Rational(c.size);
  }
  return acc;
}

std::vector<Cyclotomic> normalize_projective(std::vector<Cyclotomic> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Cyclotomic inv = v[i].inverse();
    for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
    return v;
  }
  throw Error(ErrorCode::kRange, "the zero vector is not a projective point");
}

// For a ≠ 0 an eigenvector satisfies c_{m+a} = λ ω^{-i(b(m+a)+k)} c_m with λ^p = 1;
// walking m = 0, a, 2a, … from c_0 = 1 gives one exact line per λ = ω^s.
std::vector<std::vector<Cyclotomic>> projective_fixed_points(const SimpleRep& rep, const HeisenbergElement& g) {
  require_standard(rep);
  if (rep.p != g.p) throw Error(ErrorCode::kPrimeMismatch, "representation and element of different H_p");
  if (g.is_central()) throw Error(ErrorCode::kRange, "central elements fix every point");
  const int p = rep.p;
  std::vector<std::vector<Cyclotomic>> out;
  if (g.a == 0) {
    for (int j = 0; j < p; ++j) {
      std::vector<Cyclotomic> v(p, Cyclotomic(p));
      v[j] = Cyclotomic(p, Rational(1));
      out.push_back(std::move(v));
    }
    return out;
  }
  for (int s = 0; s < p; ++s) {
    std::vector<long> expo(p, 0);
    long e = 0;
    int m = 0;
    for (int t = 1; t < p; ++t) {
      const int next = mod(m + g.a, p);
      e += s - static_cast<long>(rep.index) * (static_cast<long>(g.b) * next + g.k);
      expo[next] = e;
      m = next;
    }
    std::vector<Cyclotomic> v;
    v.reserve(p);
    for (int j = 0; j < p; ++j) v.push_back(Cyclotomic::omega_power(p, expo[j]));
    out.push_back(normalize_projective(std::move(v)));
  }
  return out;
}

std::vector<HeisenbergElement> cyclic_subgroup_generators(int p) {
  std::vector<HeisenbergElement> out{HeisenbergElement::e2(p)};
  for (int b = 0; b < p; ++b) out.push_back(HeisenbergElement::make(p, 1, b, 0));
  return out;
}

std::vector<std::vector<Cyclotomic>> all_fixed_points(const SimpleRep& rep) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& g : cyclic_subgroup_generators(rep.p)) {
    for (auto& pt : projective_fixed_points(rep, g)) {
      bool seen = false;
      for (const auto& q : out) {
        if (q == pt) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace algtool
