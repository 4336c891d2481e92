#include "algtool/sklyanin2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "algtool/error.hpp"
#include "algtool/heisenberg.hpp"
#include "algtool/parallel.hpp"

namespace algtool {

SymmetricForm q5_form(const Rational& a, const Rational& b) { return SymmetricForm(q5_matrix(a, b)); }

Eigen::MatrixXcd q5_numeric(double a, double b, const std::vector<ComplexF>& u) {
  if (u.size() != 5) throw Error(ErrorCode::kArity, "Q(a,b) needs 5 coordinates");
  Eigen::MatrixXcd m(5, 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const int d = (j - i + 5) % 5;
      const ComplexF uk = u[static_cast<std::size_t>((3 * (i + j)) % 5)];
      m(i, j) = d == 0 ? 2.0 * uk : ((d == 1 || d == 4) ? b : a) * uk;
    }
  }
  return m;
}

MultiPoly<Rational> cprime_poly() {
  const Ring ring({"a", "b"});
  const Field<Rational> q;
  MultiPoly<Rational> f(ring, q);
  f.add_term({3, 3}, Rational(-1));
  f.add_term({5, 0}, Rational(1));
  f.add_term({0, 5}, Rational(1));
  f.add_term({2, 2}, Rational(2));
  f.add_term({1, 1}, Rational(-8));
  return f;
}

std::optional<Rational> t_param(const Rational& a, const Rational& b) {
  const Rational num = a * a * a * b - b * b * b - 2 * a * a;
  const Rational den = a * a * a * a - a * b * b - 4 * b;
  if (sgn(den) == 0) {
    if (sgn(num) == 0) return std::nullopt;
    throw Error(ErrorCode::kPole, "t has a pole at this parameter (denominator zero, numerator " + to_string(num) + ")");
  }
  return Rational(num / den);
}

std::optional<double> t_param(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorCode::kRange, "non-finite parameter");
  const double num = a * a * a * b - b * b * b - 2 * a * a;
  const double den = a * a * a * a - a * b * b - 4 * b;
  const double num_mag = std::abs(a * a * a * b) + std::abs(b * b * b) + std::abs(2 * a * a);
  const double den_mag = std::abs(a * a * a * a) + std::abs(a * b * b) + std::abs(4 * b);
  const bool den_zero = std::abs(den) <= 1e-12 * den_mag;
  const bool num_zero = std::abs(num) <= 1e-12 * num_mag;
  if (den_zero) {
    if (num_zero) return std::nullopt;
    throw Error(ErrorCode::kPole, "t has a pole at this parameter");
  }
  return num / den;
}

Elimination eliminate_t() {
  const Ring ring({"t", "a", "b"});
  const Field<Rational> q;
  auto mono = [&](int t, int a, int b, long c) { return MultiPoly<Rational>::term(ring, q, {t, a, b}, Rational(c)); };
  const auto f = mono(3, 0, 2, -2) + mono(1, 1, 2, 2) + mono(0, 2, 0, -2);
  const auto g = mono(2, 2, 1, -1) + mono(1, 1, 2, -1) + mono(0, 2, 0, 2);
  const Ring ab({"a", "b"});
  Elimination out{drop_variable(resultant(f, g, 0), 0, ab), MultiPoly<Rational>(ab, q), false};
  const auto cprime = cprime_poly();
  if (auto quot = exact_divide(out.resultant, cprime)) {
    out.cofactor = std::move(*quot);
    out.check = true;
  }
  return out;
}

std::vector<CurvePoint> curve_points(const std::vector<double>& a_grid) {
  std::vector<CurvePoint> out;
  for (double a : a_grid) {
    // C′ as a polynomial in b, low degree first.
    const std::vector<double> coeffs{a * a * a * a * a, -8 * a, 2 * a * a, -a * a * a, 0.0, 1.0};
    for (double b : real_roots(coeffs)) {
      const double res = cprime_residual(a, b);
      const double mag = std::abs(a * a * a * b * b * b) + std::abs(a * a * a * a * a) + std::abs(b * b * b * b * b) +
                         std::abs(2 * a * a * b * b) + std::abs(8 * a * b);
      if (std::abs(res) <= 1e-10 * std::max(1.0, mag)) out.push_back({a, b, res});
    }
  }
  return out;
}

std::vector<CurvePoint> default_curve_points() { return curve_points({1.0}); }

namespace {

std::vector<ComplexF> scaled(std::vector<ComplexF> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  if (m > 0.0) {
    for (auto& x : v) x /= m;
  }
  return v;
}

bool same_projective(const std::vector<ComplexF>& p, const std::vector<ComplexF>& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (std::abs(p[i] * q[j] - p[j] * q[i]) > 1e-9) return false;
    }
  }
  return true;
}

double required_t(const CurvePoint& cp) {
  const auto t = t_param(cp.a, cp.b);
  if (!t) {
    throw Error(ErrorCode::kIndeterminate,
                "t is 0/0 at this parameter; it is a singular point of the parameter curve, pick another point");
  }
  return *t;
}

ComplexF det3(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  Eigen::Matrix3cd s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s(i, j) = m(static_cast<Eigen::Index>(r[i]), static_cast<Eigen::Index>(c[j]));
  }
  return s.determinant();
}

std::vector<ComplexF> random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<ComplexF> u(5);
  for (auto& x : u) {
    const double re = nd(rng);
    x = ComplexF(re, nd(rng));
  }
  return u;
}

void record(Stratum& s, const NumericRank& r) {
  s.ranks.push_back(r.rank);
  if (r.rank > 0) s.min_kept_ratio = std::min(s.min_kept_ratio, r.kept_min_ratio);
  s.max_dropped_ratio = std::max(s.max_dropped_ratio, r.dropped_max_ratio);
}

void finish(Stratum& s) {
  s.profile = rank_profile(s.expected_rank, 5);
  s.pass = !s.ranks.empty() &&
           std::all_of(s.ranks.begin(), s.ranks.end(), [&](std::size_t r) { return r == static_cast<std::size_t>(s.expected_rank); });
}

std::vector<ComplexF> to_complex(const std::vector<double>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<std::vector<ComplexF>> e_prime_orbit(double t) {
  const std::vector<ComplexF> base{0.0, 1.0, t, -t, -1.0};
  const SimpleRep v1 = SimpleRep::standard(5, 1);
  std::vector<std::vector<ComplexF>> out;
  for (long c = 0; c < 5; ++c) {
    for (long d = 0; d < 5; ++d) {
      const auto g = h_mul(h_pow(HeisenbergElement::e1(5), c), h_pow(HeisenbergElement::e2(5), d));
      out.push_back(scaled(rep_apply(v1, g, base)));
    }
  }
  return out;
}

PointModuleReport point_module_check(const CurvePoint& cp, const Tolerances& tol) {
  PointModuleReport rep;
  rep.t = required_t(cp);
  const auto orbit = e_prime_orbit(rep.t);
  const auto subsets = k_subsets(5, 3);
  struct PointResult {
    double max_minor;
    std::size_t rank;
  };
  const auto results = parallel_map(orbit.size(), [&](std::size_t i) {
    const auto m = q5_numeric(cp.a, cp.b, orbit[i]);
    double worst = 0.0;
    for (const auto& r : subsets) {
      for (const auto& c : subsets) worst = std::max(worst, std::abs(det3(m, r, c)));
    }
    return PointResult{worst, numeric_rank(m, tol.rank).rank};
  });
  rep.points = orbit.size();
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j) fresh = !same_projective(orbit[i], orbit[j]);
    if (fresh) ++rep.distinct_points;
    rep.max_minor = std::max(rep.max_minor, results[i].max_minor);
    rep.ranks.push_back(results[i].rank);
  }
  rep.minors_evaluated = orbit.size() * subsets.size() * subsets.size();
  rep.pass = rep.max_minor < tol.residual &&
             std::all_of(rep.ranks.begin(), rep.ranks.end(), [](std::size_t r) { return r == 2; });
  return rep;
}

Stratification stratify(const CurvePoint& cp, int samples, std::uint64_t seed, const Tolerances& tol) {
  if (samples < 1) throw Error(ErrorCode::kRange, "samples must be positive");
  Stratification out;
  out.t = required_t(cp);
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(samples);

  // All randomness is drawn up front so the result does not depend on scheduling.
  std::vector<std::vector<ComplexF>> generic(n);
  for (auto& u : generic) u = random_point(rng);
  constexpr int kRetries = 8;
  std::vector<std::vector<std::vector<ComplexF>>> lines(n);
  for (auto& attempts : lines) {
    for (int k = 0; k < kRetries; ++k) {
      attempts.push_back(random_point(rng));
      attempts.push_back(random_point(rng));
    }
  }

  Stratum gen{"generic", 5, {}, 1.0, 0.0, {}, false};
  for (const auto& r : parallel_map(n, [&](std::size_t i) {
         return numeric_rank(q5_numeric(cp.a, cp.b, scaled(generic[i])), tol.rank);
       })) {
    record(gen, r);
  }
  finish(gen);

  // det Q restricted to u = p + s·d has degree 5 in s: sample it at the sixth
  // roots of unity, recover the coefficients by an inverse DFT, take all roots.
  const auto on_lines = parallel_map(n, [&](std::size_t i) {
    const auto& attempts = lines[i];
    for (int k = 0; k < kRetries; ++k) {
      const auto& p = attempts[static_cast<std::size_t>(2 * k)];
      const auto& d = attempts[static_cast<std::size_t>(2 * k + 1)];
      auto along = [&](ComplexF s) {
        std::vector<ComplexF> u(5);
        for (std::size_t j = 0; j < 5; ++j) u[j] = p[j] + s * d[j];
        return u;
      };
      std::vector<ComplexF> values(6), coeffs(6, 0.0);
      for (int k2 = 0; k2 < 6; ++k2) {
        values[static_cast<std::size_t>(k2)] = q5_numeric(cp.a, cp.b, along(std::polar(1.0, k2 * std::numbers::pi / 3))).determinant();
      }
      for (int j = 0; j < 6; ++j) {
        for (int k2 = 0; k2 < 6; ++k2) {
          coeffs[static_cast<std::size_t>(j)] += values[static_cast<std::size_t>(k2)] * std::polar(1.0, -j * k2 * std::numbers::pi / 3) / 6.0;
        }
      }
      const double top = std::abs(coeffs[5]);
      double all = 0.0;
      for (const auto& c : coeffs) all = std::max(all, std::abs(c));
      if (top <= 1e-10 * all) continue;
      const auto roots = polynomial_roots(coeffs);
      if (roots.size() != 5) continue;
      std::vector<NumericRank> ranks;
      for (const auto& r : roots) ranks.push_back(numeric_rank(q5_numeric(cp.a, cp.b, scaled(along(r))), tol.rank));
      return ranks;
    }
    throw Error(ErrorCode::kSampling, "could not locate roots of det Q on any sampled line");
  });
  Stratum hyper{"det_q_zero_off_e_prime", 4, {}, 1.0, 0.0, {}, false};
  for (const auto& line : on_lines) {
    for (const auto& r : line) record(hyper, r);
  }
  finish(hyper);

  Stratum curve{"e_prime", 2, {}, 1.0, 0.0, {}, false};
  const auto orbit = e_prime_orbit(out.t);
  for (const auto& r : parallel_map(orbit.size(), [&](std::size_t i) {
         return numeric_rank(q5_numeric(cp.a, cp.b, orbit[i]), tol.rank);
       })) {
    record(curve, r);
  }
  finish(curve);

  out.strata = {gen, hyper, curve};
  out.pass = gen.pass && hyper.pass && curve.pass;
  return out;
}

std::vector<MultiPoly<double>> ct_quadrics(double t) {
  const Ring ring = Ring::indexed("u", 5);
  const Field<double> f;
  auto u = [&](int i) { return MultiPoly<double>::variable(ring, f, static_cast<std::size_t>(((i % 5) + 5) % 5)); };
  std::vector<MultiPoly<double>> out;
  for (int i = 0; i < 5; ++i) out.push_back(u(i) * u(i) * t + u(i + 1) * u(i + 4) * (t * t) - u(i + 2) * u(i + 3));
  return out;
}

MinorIdealReport minor_ideal_checks(double a, double b, const Tolerances& tol) {
  MinorIdealReport rep;
  rep.t = required_t({a, b, 0.0});
  const auto q = q5_matrix<double>(a, b);
  const auto quad = ct_quadrics(rep.t);
  const Ring ring = quad.front().ring();
  const Field<double> f;

  const auto cubic_basis = monomials_of_degree(5, 3);
  const auto cubic_index = monomial_index(cubic_basis);
  DenseMatrix<ComplexF> minors3, products3;
  for (const auto& m : mat_minors(q, 3)) {
    // Q lives in ring u0..u4 as well; only the coefficient layout matters.
    minors3.push_back(to_complex(coefficient_vector(m, cubic_basis, cubic_index)));
  }
  for (const auto& qi : quad) {
    for (std::size_t j = 0; j < 5; ++j) {
      products3.push_back(to_complex(coefficient_vector(MultiPoly<double>::variable(ring, f, j) * qi, cubic_basis, cubic_index)));
    }
  }
  rep.cubic = compare_spans_float(minors3, products3, tol.span);
  rep.deg6 = rep.cubic.equal;

  const auto quartic_basis = monomials_of_degree(5, 4);
  const auto quartic_index = monomial_index(quartic_basis);
  DenseMatrix<ComplexF> minors4, products4;
  for (const auto& m : mat_minors(q, 4)) minors4.push_back(to_complex(coefficient_vector(m, quartic_basis, quartic_index)));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i; j < 5; ++j) {
      products4.push_back(to_complex(coefficient_vector(quad[i] * quad[j], quartic_basis, quartic_index)));
    }
  }
  rep.quartic = compare_spans_float(minors4, products4, tol.span);
  rep.deg8 = rep.quartic.equal;
  return rep;
}

SecantReport secant_check(const CurvePoint& cp) {
  SecantReport rep;
  rep.t = required_t(cp);
  if (rep.t == 0.0) throw Error(ErrorCode::kRange, "the secant quadrics need t != 0");
  const double t = rep.t;
  const Ring ring = Ring::indexed("z", 5);
  const Field<double> f;
  auto z = [&](int i) { return MultiPoly<double>::variable(ring, f, static_cast<std::size_t>(i % 5)); };
  PolyMatrix<double> jac(5, 5, ring, f);
  for (int i = 0; i < 5; ++i) {
    const auto qi = z(i) * z(i) + z(i + 1) * z(i + 4) * t - z(i + 2) * z(i + 3) * (1.0 / t);
    for (std::size_t j = 0; j < 5; ++j) jac.set(static_cast<std::size_t>(i), j, poly_partial(qi, j));
  }
  const auto jdet = mat_det(jac);
  const auto ddet = mat_det(q5_matrix<double>(cp.a, cp.b));
  rep.jacobian_degree = jdet.total_degree();
  rep.det_degree = ddet.total_degree();
  const auto basis = monomials_of_degree(5, 5);
  const auto index = monomial_index(basis);
  const auto jv = coefficient_vector(jdet, basis, index);
  const auto dv = coefficient_vector(ddet, basis, index);
  double jd = 0.0, dd = 0.0, jj = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    jd += jv[i] * dv[i];
    dd += dv[i] * dv[i];
    jj += jv[i] * jv[i];
  }
  if (dd == 0.0 || jj == 0.0) throw Error(ErrorCode::kConditioning, "a determinant vanished identically");
  rep.lambda = jd / dd;
  double r2 = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) r2 += (jv[i] - rep.lambda * dv[i]) * (jv[i] - rep.lambda * dv[i]);
  rep.residual = std::sqrt(r2 / jj);
  return rep;
}

Cyclotomic evaluate_commutative(const Relation& r, int p, const std::vector<Cyclotomic>& y) {
  Cyclotomic acc(p);
  for (const auto& [w, c] : r.coeffs) {
    const auto letters = word_letters(w, p, r.degree);
    Cyclotomic term(p, c);
    for (int l : letters) term *= y[static_cast<std::size_t>(l)];
    acc += term;
  }
  return acc;
}

std::vector<std::vector<Cyclotomic>> onedim_reps(int p, const std::vector<Rational>& a) {
  const auto pres = make_presentation("cliffordC", p, a);
  int i0 = 0;
  for (std::size_t i = 1; i < a.size() && i0 == 0; ++i) {
    if (sgn(a[i]) != 0) i0 = static_cast<int>(i);
  }
  if (i0 == 0) throw Error(ErrorCode::kHypothesis, "some a_i with i >= 1 must be nonzero");
  // a_0 = 0 forces y_k^2 = 0 for every k, incompatible with y_0 = 1.
  if (sgn(a[0]) == 0) return {};
  const auto half = static_cast<std::size_t>((p - 1) / 2);
  for (std::size_t i = 1; i <= half; ++i) {
    if (sgn(a[i]) == 0) continue;
    const Rational r = a[i] / a[0];
    Rational rp = 1, two_p = 1;
    for (int k = 0; k < p; ++k) {
      rp *= r;
      two_p *= 2;
    }
    if (rp != two_p) return {};
  }
  // With a_{i0}/a_0 = 2 the recursion y_{k·i0} = y_{i0}^k closes up iff y_{i0}^p = 1.
  std::vector<std::vector<Cyclotomic>> out;
  for (long j = 0; j < p; ++j) {
    std::vector<Cyclotomic> y(static_cast<std::size_t>(p), Cyclotomic(p));
    for (long k = 0; k < p; ++k) y[static_cast<std::size_t>((k * i0) % p)] = Cyclotomic::omega_power(p, j * k);
    const bool ok = std::all_of(pres.relations.begin(), pres.relations.end(),
                                [&](const Relation& rel) { return evaluate_commutative(rel, p, y).is_zero(); });
    if (ok) out.push_back(std::move(y));
  }
  return out;
}

}  // namespace algtool
