#include "algtool/rational.hpp"

#include <cmath>
#include <string>

#include "algtool/error.hpp"

namespace algtool {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kModulus: return "modulus";
    case ErrorCode::kPrimeMismatch: return "prime_mismatch";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kRingMismatch: return "ring_mismatch";
    case ErrorCode::kArity: return "arity";
    case ErrorCode::kRange: return "range";
    case ErrorCode::kNotSquare: return "not_square";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kStability: return "stability";
    case ErrorCode::kPole: return "pole";
    case ErrorCode::kIndeterminate: return "indeterminate";
    case ErrorCode::kConditioning: return "conditioning";
    case ErrorCode::kSampling: return "sampling";
    case ErrorCode::kAsymmetric: return "asymmetric";
    case ErrorCode::kHypothesis: return "hypothesis";
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorCode::kUsage, "cannot parse rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator in '" + std::string(text) + "'");
    value = Rational(n, d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_part = s.substr(e + 1);
      bool exp_neg = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_neg = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      if (!all_digits(exp_part) || exp_part.size() > 6) bad_rational(text);
      exponent = std::stol(std::string(exp_part));
      if (exp_neg) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      const auto ip = s.substr(0, dot);
      const auto fp = s.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
        bad_rational(text);
      }
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(s)) bad_rational(text);
      digits = std::string(s);
    }
    mpz_class n(digits, 10);
    const long shift = exponent - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) {
      value = Rational(n * scale);
    } else {
      value = Rational(n, scale);
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_approximation(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kRange, "cannot approximate a non-finite value");
  // Continued fraction convergents.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - static_cast<double>(a);
  }
  Rational r(h, k);
  r.canonicalize();
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace algtool
