#include "algtool/koszul.hpp"

#include "algtool/error.hpp"

namespace algtool {

QuadraticDualPair quadratic_dual(const Presentation& pres) {
  const int p = pres.p;
  const std::size_t cols = static_cast<std::size_t>(p) * p;
  DenseMatrix<Rational> rel;
  for (const auto& r : pres.relations) {
    if (r.degree != 2) throw Error(ErrorCode::kRange, "quadratic_dual needs degree-2 relations only");
    std::vector<Rational> row(cols);
    for (const auto& [c, v] : r.coeffs) row[c] = v;
    rel.push_back(std::move(row));
  }
  const Field<Rational> q;
  QuadraticDualPair out{pres, {}, {}, {}, {}};
  out.relation_basis = rref(rel, q).rows;
  out.dual_basis = null_space(rel, cols, q);
  std::vector<Relation> dual_rels;
  for (const auto& v : out.dual_basis) {
    Relation r;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(v[c]) != 0) r.coeffs.emplace(c, v[c]);
    }
    dual_rels.push_back(std::move(r));
  }
  out.dual = presentation_from_relations(pres.kind + "!", p, std::move(dual_rels), pres.params);
  for (const auto& r : out.relation_basis) {
    std::vector<Rational> row;
    for (const auto& w : out.dual_basis) {
      Rational acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc += r[c] * w[c];
      row.push_back(acc);
    }
    out.evaluation.push_back(std::move(row));
  }
  return out;
}

std::vector<Cyclotomic> koszul_residual(GradedEngine& a, GradedEngine& dual, const SimpleRep& rep,
                                        const HeisenbergElement& g, int max_degree) {
  const int p = rep.p;
  const auto ch = a.character_coeffs(g, rep, max_degree);
  auto dch = dual.character_coeffs(g, SimpleRep::standard(p, p - rep.index), max_degree);
  for (auto& c : dch) c = c.conjugate();
  std::vector<Cyclotomic> out;
  for (int n = 1; n <= max_degree; ++n) {
    Cyclotomic acc(p);
    for (int k = 0; k <= n; ++k) {
      const Cyclotomic term = ch[k] * dch[n - k];
      if ((n - k) % 2 == 0) acc += term; else acc -= term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Cyclotomic> koszul_identity_check(const Presentation& pres, const SimpleRep& rep,
                                              const HeisenbergElement& g, int max_degree) {
  const auto pair = quadratic_dual(pres);
  GradedEngine a(pres);
  GradedEngine d(pair.dual);
  return koszul_residual(a, d, rep, g, max_degree);
}

}  // namespace algtool
