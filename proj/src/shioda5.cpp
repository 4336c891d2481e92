#include "algtool/shioda5.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "algtool/error.hpp"
#include "algtool/heisenberg.hpp"
#include "algtool/parallel.hpp"

namespace algtool {

namespace {

constexpr int kP = 5;

MultiPoly<Rational> x(std::size_t i) {
  static const Ring ring = Ring::indexed("x", kP);
  return MultiPoly<Rational>::variable(ring, Field<Rational>{}, i % kP);
}

template <class T>
std::vector<T> orbit_image(const std::vector<T>& base, long c, long d) {
  const auto g = h_mul(h_pow(HeisenbergElement::e1(kP), c), h_pow(HeisenbergElement::e2(kP), d));
  return rep_apply(SimpleRep::standard(kP, 1), g, base);
}

std::vector<ComplexF> embed_scaled(const std::vector<Cyclotomic>& v) {
  std::vector<ComplexF> out;
  double m = 0.0;
  for (const auto& c : v) {
    out.push_back(c.embed(1));
    m = std::max(m, std::abs(out.back()));
  }
  for (auto& c : out) c /= m;
  return out;
}

std::vector<ComplexF> scaled(std::vector<ComplexF> v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  for (auto& c : v) c /= m;
  return v;
}

double worst_minor(const std::vector<MultiPoly<Rational>>& minors, const std::vector<ComplexF>& pt) {
  double w = 0.0;
  for (const auto& m : minors) w = std::max(w, std::abs(poly_eval(m, std::span<const ComplexF>(pt))));
  return w;
}

bool all_vanish(const std::vector<MultiPoly<Rational>>& polys, const std::vector<Cyclotomic>& pt) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const auto& f) { return poly_eval(f, std::span<const Cyclotomic>(pt)).is_zero(); });
}

struct Jacobian {
  std::vector<std::vector<MultiPoly<Rational>>> partials;  // [minor][variable]

  NumericRank rank_at(const std::vector<ComplexF>& pt, double tol) const {
    Eigen::MatrixXcd j(static_cast<Eigen::Index>(partials.size()), kP);
    for (std::size_t r = 0; r < partials.size(); ++r) {
      for (std::size_t c = 0; c < kP; ++c) {
        j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = poly_eval(partials[r][c], std::span<const ComplexF>(pt));
      }
    }
    return numeric_rank(j, tol, 1.0);
  }
};

Jacobian jacobian_of(const std::vector<MultiPoly<Rational>>& minors) {
  Jacobian jac;
  for (const auto& m : minors) {
    std::vector<MultiPoly<Rational>> row;
    for (std::size_t v = 0; v < kP; ++v) row.push_back(poly_partial(m, v));
    jac.partials.push_back(std::move(row));
  }
  return jac;
}

void add_commutators(std::vector<Relation>& rels) {
  for (int i = 0; i < kP; ++i) {
    for (int j = i + 1; j < kP; ++j) {
      Relation r;
      r.add({i, j}, kP, Rational(1));
      r.add({j, i}, kP, Rational(-1));
      rels.push_back(std::move(r));
    }
  }
}

DenseMatrix<Rational> relation_rows(const Presentation& pres) {
  DenseMatrix<Rational> rows;
  for (const auto& r : pres.relations) {
    if (r.degree != 2) throw Error(ErrorCode::kRange, "span comparison expects quadratic relations");
    std::vector<Rational> row(static_cast<std::size_t>(pres.p * pres.p));
    for (const auto& [w, c] : r.coeffs) row[w] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PolyMatrix<Rational> s15_matrix() {
  PolyMatrix<Rational> m(3, kP, x(0).ring(), Field<Rational>{});
  for (std::size_t i = 0; i < kP; ++i) {
    m.set(0, i, x(i) * x(i));
    m.set(1, i, x(i + 2) * x(i + 3));
    m.set(2, i, x(i + 1) * x(i + 4));
  }
  return m;
}

std::vector<MultiPoly<Rational>> s15_minors() { return mat_minors(s15_matrix(), 3); }

std::vector<std::vector<Cyclotomic>> ca_orbit(const Rational& a) {
  const std::vector<Cyclotomic> base{Cyclotomic(kP), Cyclotomic(kP, Rational(1)), Cyclotomic(kP, a),
                                     Cyclotomic(kP, Rational(-a)), Cyclotomic(kP, Rational(-1))};
  std::vector<std::vector<Cyclotomic>> out;
  for (long c = 0; c < kP; ++c) {
    for (long d = 0; d < kP; ++d) out.push_back(orbit_image(base, c, d));
  }
  return out;
}

OrbitReport ca_orbit_check(const Rational& a) {
  std::vector<MultiPoly<Rational>> rels;
  for (std::size_t i = 0; i < kP; ++i) {
    rels.push_back(x(i) * x(i) * a + x(i + 1) * x(i + 4) * Rational(a * a) - x(i + 2) * x(i + 3));
  }
  const auto minors = s15_minors();
  const auto orbit = ca_orbit(a);
  const auto flags = parallel_map(orbit.size(), [&](std::size_t i) {
    return std::pair<bool, bool>{all_vanish(rels, orbit[i]), all_vanish(minors, orbit[i])};
  });
  OrbitReport rep;
  rep.a = a;
  rep.points = orbit.size();
  rep.relations = std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.first; });
  rep.minors = std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
  rep.pass = rep.relations && rep.minors;
  return rep;
}

TwoTorsionReport two_torsion_check(int samples, std::uint64_t seed, const Tolerances& tol) {
  if (samples < 1) throw Error(ErrorCode::kRange, "samples must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  std::vector<std::pair<double, double>> params;
  for (int s = 0; s < samples; ++s) {
    const double x1 = ud(rng);
    params.emplace_back(x1, ud(rng));
  }
  const auto minors = s15_minors();
  // On x4 = x1, x3 = x2 the sextic is x1x2·x0⁴ − x1²x2²·x0² − (x1⁵+x2⁵)·x0 + 2x1³x2³.
  auto points_for = [](double x1, double x2) {
    const std::vector<ComplexF> coeffs{2 * x1 * x1 * x1 * x2 * x2 * x2, -(std::pow(x1, 5) + std::pow(x2, 5)),
                                       -x1 * x1 * x2 * x2, 0.0, x1 * x2};
    const auto roots = polynomial_roots(coeffs);
    if (roots.size() != 4) throw Error(ErrorCode::kInternal, "a quartic must have four complex roots");
    std::vector<std::vector<ComplexF>> pts;
    for (const auto& r : roots) pts.push_back({r, x1, x2, x2, x1});
    return pts;
  };
  const auto worst = parallel_map(params.size(), [&](std::size_t i) {
    double w = 0.0;
    for (const auto& pt : points_for(params[i].first, params[i].second)) w = std::max(w, worst_minor(minors, scaled(pt)));
    return w;
  });
  TwoTorsionReport rep;
  rep.samples = samples;
  rep.roots = 4 * params.size();
  for (double w : worst) rep.worst = std::max(rep.worst, w);
  const std::vector<Cyclotomic> origin{Cyclotomic(kP, Rational(1)), Cyclotomic(kP), Cyclotomic(kP), Cyclotomic(kP),
                                       Cyclotomic(kP)};
  rep.origin_exact = all_vanish(minors, origin);
  auto moved = points_for(params[0].first, params[0].second).front();
  moved[0] += 1e-2;
  rep.control_residual = worst_minor(minors, scaled(moved));
  rep.pass = rep.worst < tol.span && rep.origin_exact;
  rep.control_pass = rep.control_residual > 1e-5;
  return rep;
}

SingularReport singular_points_check(const Tolerances& tol) {
  SingularReport rep;
  const auto minors = s15_minors();
  const auto jac = jacobian_of(minors);
  rep.points = all_fixed_points(SimpleRep::standard(kP, 1));
  const auto on = parallel_map(rep.points.size(), [&](std::size_t i) { return all_vanish(minors, rep.points[i]); });
  rep.all_on_surface = std::all_of(on.begin(), on.end(), [](bool b) { return b; });
  const auto sing = parallel_map(rep.points.size(), [&](std::size_t i) {
    return jac.rank_at(embed_scaled(rep.points[i]), tol.rank);
  });
  for (const auto& r : sing) {
    rep.singular_ranks.push_back(r.rank);
    rep.max_singular_sigma = std::max(rep.max_singular_sigma, r.singular_values.front());
  }
  auto orbit = ca_orbit(Rational(1));
  orbit.resize(10);
  const auto smooth = parallel_map(orbit.size(), [&](std::size_t i) { return jac.rank_at(embed_scaled(orbit[i]), tol.rank); });
  rep.min_smooth_sigma2 = smooth.front().singular_values[1];
  for (const auto& r : smooth) {
    rep.smooth_ranks.push_back(r.rank);
    rep.min_smooth_sigma2 = std::min(rep.min_smooth_sigma2, r.singular_values[1]);
  }
  rep.pass = rep.points.size() == 30 && rep.all_on_surface &&
             std::all_of(rep.singular_ranks.begin(), rep.singular_ranks.end(), [](std::size_t r) { return r < 2; }) &&
             std::all_of(rep.smooth_ranks.begin(), rep.smooth_ranks.end(), [](std::size_t r) { return r == 2; });
  return rep;
}

Presentation shioda_fiber(const Rational& A, const Rational& B) {
  std::vector<Relation> rels;
  for (int i = 0; i < kP; ++i) {
    Relation r;
    r.add({i, i}, kP, A * B);
    r.add({i + 1, i - 1}, kP, A * A);
    r.add({i + 2, i - 2}, kP, Rational(-(B * B)));
    rels.push_back(std::move(r));
  }
  add_commutators(rels);
  return presentation_from_relations("fiber", kP, std::move(rels), {to_string(A), to_string(B)});
}

Presentation relabel(const Presentation& pres, int m) {
  std::vector<Relation> rels;
  for (const auto& r : pres.relations) {
    Relation out;
    out.degree = r.degree;
    for (const auto& [w, c] : r.coeffs) {
      auto letters = word_letters(w, pres.p, r.degree);
      for (auto& l : letters) l = l * m;
      out.add(letters, pres.p, c);
    }
    rels.push_back(std::move(out));
  }
  return presentation_from_relations(pres.kind, pres.p, std::move(rels), pres.params);
}

bool same_relation_span(const Presentation& x, const Presentation& y) {
  if (x.p != y.p) return false;
  const Field<Rational> q;
  return rref(relation_rows(x), q).rows == rref(relation_rows(y), q).rows;
}

std::size_t count_cusp_cycles() {
  const SimpleRep v1 = SimpleRep::standard(kP, 1);
  const std::vector<HeisenbergElement> gens{HeisenbergElement::e1(kP), HeisenbergElement::e2(kP)};
  std::size_t total = 0;
  for (const auto& g : cyclic_subgroup_generators(kP)) {
    const auto pts = projective_fixed_points(v1, g);
    auto index_of = [&](const std::vector<Cyclotomic>& v) {
      const auto n = normalize_projective(v);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == n) return i;
      }
      throw Error(ErrorCode::kInternal, "H does not permute the fixed points of a cyclic subgroup");
    };
    // perm[h][i]: image of fixed point i under generator h.
    std::vector<std::vector<std::size_t>> perm;
    for (const auto& h : gens) {
      std::vector<std::size_t> img;
      for (const auto& p : pts) img.push_back(index_of(rep_apply(v1, h, p)));
      perm.push_back(std::move(img));
    }
    using Line = std::pair<std::size_t, std::size_t>;
    auto line = [](std::size_t i, std::size_t j) { return Line{std::min(i, j), std::max(i, j)}; };
    std::set<Line> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (seen.count(line(i, j))) continue;
        std::set<Line> orbit{line(i, j)};
        std::vector<Line> stack{line(i, j)};
        while (!stack.empty()) {
          const Line l = stack.back();
          stack.pop_back();
          for (const auto& pm : perm) {
            const Line img = line(pm[l.first], pm[l.second]);
            if (orbit.insert(img).second) stack.push_back(img);
          }
        }
        seen.insert(orbit.begin(), orbit.end());
        // A cycle of lines: every vertex on exactly two lines, one connected loop.
        std::vector<std::vector<std::size_t>> adj(pts.size());
        for (const auto& [u, v] : orbit) {
          adj[u].push_back(v);
          adj[v].push_back(u);
        }
        if (!std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; })) continue;
        std::size_t prev = 0, cur = adj[0][0], steps = 1;
        while (cur != 0) {
          const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = next;
          ++steps;
        }
        if (steps == pts.size()) ++total;
      }
    }
  }
  return total;
}

FiberReport cycle_fiber_equivalence() {
  FiberReport rep;
  const auto cycle = make_presentation("cycle", kP, {});
  const auto at_1_0 = shioda_fiber(Rational(1), Rational(0));
  const auto at_0_1 = shioda_fiber(Rational(0), Rational(1));
  rep.direct_at_1_0 = same_relation_span(cycle, at_1_0);
  rep.direct_at_0_1 = same_relation_span(cycle, at_0_1);
  for (int m = 1; m < kP; ++m) {
    if (same_relation_span(relabel(cycle, m), at_0_1)) rep.relabel_at_0_1.push_back(m);
  }
  rep.hilbert = hilbert(at_0_1, 3);
  rep.cusp_cycles = count_cusp_cycles();
  rep.pass = rep.direct_at_1_0 && !rep.relabel_at_0_1.empty() && rep.hilbert == std::vector<long>{1, 5, 10, 15} &&
             rep.cusp_cycles == 12;
  return rep;
}

}  // namespace algtool
