#include "algtool/json_io.hpp"

namespace algtool {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"p", c.prime()}, {"coeffs", coeffs}};
}

Json to_json(const ComplexF& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const std::vector<Cyclotomic>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const std::vector<ComplexF>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const RankProfile& r) {
  return {{"rank", r.rank},
          {"simple", {{"count", r.simple_count}, {"dim", r.simple_dim}}},
          {"fat", {{"count", r.fat_count}, {"multiplicity", r.fat_multiplicity}}}};
}

Json to_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    rows.push_back({{"class", h_name(t.classes[i])}, {"coeffs", to_json(t.rows[i])}});
  }
  return {{"max_degree", t.max_degree}, {"rows", rows}};
}

Json to_json(const NumericRank& r) {
  return {{"rank", r.rank},
          {"singular_values", r.singular_values},
          {"kept_min_ratio", r.kept_min_ratio},
          {"dropped_max_ratio", r.dropped_max_ratio}};
}

Json to_json(const SpanComparison& s) {
  return {{"equal", s.equal},
          {"rank_minors", s.rank_a},
          {"rank_products", s.rank_b},
          {"minors_outside", s.a_outside_b},
          {"products_outside", s.b_outside_a}};
}

Json to_json(const Elimination& e) {
  return {{"check", e.check}, {"resultant", to_text(e.resultant)}, {"cofactor", to_text(e.cofactor)}};
}

Json to_json(const CurvePoint& c) { return {{"a", c.a}, {"b", c.b}, {"residual", c.residual}}; }

Json to_json(const PointModuleReport& r) {
  return {{"t", r.t},
          {"points", r.points},
          {"distinct_points", r.distinct_points},
          {"minors_evaluated", r.minors_evaluated},
          {"max_minor", r.max_minor},
          {"ranks", r.ranks},
          {"check", r.pass}};
}

Json to_json(const Stratification& s) {
  Json strata = Json::array();
  for (const auto& st : s.strata) {
    strata.push_back({{"name", st.name},
                      {"expected_rank", st.expected_rank},
                      {"ranks", st.ranks},
                      {"min_kept_ratio", st.min_kept_ratio},
                      {"max_dropped_ratio", st.max_dropped_ratio},
                      {"profile", to_json(st.profile)},
                      {"check", st.pass}});
  }
  return {{"t", s.t}, {"strata", strata}, {"check", s.pass}};
}

Json to_json(const MinorIdealReport& r) {
  return {{"t", r.t}, {"deg6", r.deg6}, {"deg8", r.deg8}, {"cubic", to_json(r.cubic)}, {"quartic", to_json(r.quartic)}};
}

Json to_json(const SecantReport& r) {
  return {{"t", r.t},
          {"lambda", r.lambda},
          {"residual", r.residual},
          {"jacobian_degree", r.jacobian_degree},
          {"det_degree", r.det_degree}};
}

Json to_json(const OrbitReport& r) {
  return {{"a", to_json(r.a)}, {"points", r.points}, {"relations", r.relations}, {"minors", r.minors}, {"check", r.pass}};
}

Json to_json(const TwoTorsionReport& r) {
  return {{"samples", r.samples},
          {"roots", r.roots},
          {"worst", r.worst},
          {"origin_exact", r.origin_exact},
          {"control_residual", r.control_residual},
          {"control_check", r.control_pass},
          {"check", r.pass}};
}

Json to_json(const SingularReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  return {{"count", r.points.size()},
          {"points", pts},
          {"all_on_surface", r.all_on_surface},
          {"singular_ranks", r.singular_ranks},
          {"smooth_ranks", r.smooth_ranks},
          {"max_singular_sigma", r.max_singular_sigma},
          {"min_smooth_sigma2", r.min_smooth_sigma2},
          {"check", r.pass}};
}

Json to_json(const FiberReport& r) {
  return {{"direct_at_1_0", r.direct_at_1_0},
          {"direct_at_0_1", r.direct_at_0_1},
          {"relabel_at_0_1", r.relabel_at_0_1},
          {"hilbert", r.hilbert},
          {"cusp_cycles", r.cusp_cycles},
          {"check", r.pass}};
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace algtool
