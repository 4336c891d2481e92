#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "algtool/parallel.hpp"
#include "algtool/poly.hpp"
#include "algtool/polymatrix.hpp"

namespace algtool {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned n) { g_threads = n; }

unsigned thread_count() {
  const unsigned n = g_threads.load();
  if (n != 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m(n, 0);
  // Descending lex: put as much degree as possible on the earliest variables.
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == n) {
      m[v] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[v] = e;
      self(self, v + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string scalar_text(const Rational& c) { return to_string(c); }

std::string scalar_text(const Cyclotomic& c) {
  std::string out = "(";
  bool first = true;
  const auto co = c.coeffs();
  for (std::size_t k = 0; k < co.size(); ++k) {
    if (sgn(co[k]) == 0) continue;
    if (!first) out += " + ";
    first = false;
    out += to_string(co[k]);
    if (k == 1) out += "*w";
    if (k > 1) out += "*w^" + std::to_string(k);
  }
  if (first) out += "0";
  return out + ")";
}

std::string scalar_text(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  // Shortest representation that round-trips.
  for (int prec = 1; prec <= 17; ++prec) {
    char trial[32];
    std::snprintf(trial, sizeof trial, "%.*g", prec, c);
    if (std::strtod(trial, nullptr) == c) return trial;
  }
  return buf;
}

std::string scalar_text(const ComplexF& c) {
  return "(" + scalar_text(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + scalar_text(std::abs(c.imag())) + "i)";
}

}  // namespace algtool
