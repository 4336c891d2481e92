#include "algtool/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "algtool/acceptance.hpp"
#include "algtool/error.hpp"
#include "algtool/koszul.hpp"
#include "algtool/parallel.hpp"

namespace algtool {

namespace {

struct Outcome {
  Json body;
  bool check = true;
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
  double max_cells = -1.0;
  std::string mode = "auto";
  Tolerances tol;
};

/// A parameter as typed: the exact value and whether it was written as a decimal.
struct Scalar {
  Rational exact;
  bool decimal = false;
  double value() const { return exact.get_d(); }
};

Scalar parse_scalar(const std::string& text) {
  return {parse_rational(text), text.find_first_of(".eE") != std::string::npos};
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(parse_rational(s));
  return out;
}

bool float_mode(const Options& o, std::initializer_list<Scalar> values) {
  if (o.mode == "exact") return false;
  if (o.mode == "float") return true;
  for (const auto& v : values) {
    if (v.decimal) return true;
  }
  return false;
}

bool is_cyclotomic(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("p") && j.contains("coeffs"); }

// {"p":5,"coeffs":[["1","1"],["-2","3"],...]} as "1 - 2/3 w + ...", w a primitive p-th root of unity.
std::string cyclotomic_text(const Json& j) {
  std::string out;
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    const auto& c = j["coeffs"][i];
    Rational q(c[0].get<std::string>() + "/" + c[1].get<std::string>());
    if (q == 0) continue;
    const bool neg = q < 0;
    if (neg) q = -q;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const std::string power = i == 0 ? "" : i == 1 ? "w" : "w^" + std::to_string(i);
    if (power.empty() || q != 1) out += to_string(q) + (power.empty() ? "" : " ");
    out += power;
  }
  return out.empty() ? "0" : out;
}

// Text rendering: one "path: value" line per leaf; scalar arrays inline, cyclotomics as w-polynomials.
void render_text(const Json& j, const std::string& path, std::ostream& os) {
  auto scalar_array = [](const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return !x.is_structured() || is_cyclotomic(x); });
  };
  if (is_cyclotomic(j)) {
    os << path << ": " << cyclotomic_text(j) << "\n";
  } else if (j.is_array() && scalar_array(j) && std::any_of(j.begin(), j.end(), is_cyclotomic)) {
    os << path << ": [";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << (i ? ", " : "") << (is_cyclotomic(j[i]) ? cyclotomic_text(j[i]) : j[i].dump());
    }
    os << "]\n";
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct AlgebraArgs {
  std::string kind;
  int p = 3;
  std::string params;
  int max_degree = 4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--algebra", kind, "polynomial, cycle, sklyanin3, cliffordC, sklyanin5, curveCa")->required();
    cmd->add_option("--p", p, "odd prime");
    cmd->add_option("--params", params, "comma-separated rationals");
    cmd->add_option("--max-degree", max_degree, "largest degree N")->check(CLI::NonNegativeNumber);
  }
  Presentation presentation() const { return make_presentation(kind, p, parse_list(params)); }
};

struct CurveArgs {
  std::string a = "1";
  std::string b;
  std::size_t root = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "parameter a");
    cmd->add_option("--b", b, "parameter b; omitted means a real root of C′ over a");
    cmd->add_option("--root", root, "which real root of C′ over a (ascending)");
  }
  CurvePoint point() const {
    const double av = parse_scalar(a).value();
    if (!b.empty()) {
      const double bv = parse_scalar(b).value();
      return {av, bv, cprime_residual(av, bv)};
    }
    const auto pts = curve_points({av});
    if (root >= pts.size()) {
      throw Error(ErrorCode::kRange, "C′ has " + std::to_string(pts.size()) + " real points over a = " + a);
    }
    return pts[root];
  }
};

HeisenbergElement parse_class(int p, const std::string& text) { return h_parse(p, text); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Heisenberg-equivariant graded algebra toolkit", "algtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--threads", o.threads, "worker threads (0: hardware)");
  app.add_option("--out", o.out, "write the report to a file");
  app.add_option("--max-cells", o.max_cells, "resource cap for graded pieces");
  app.add_option("--mode", o.mode, "auto, exact or float")->check(CLI::IsMember({"auto", "exact", "float"}));
  app.add_option("--tol-rank", o.tol.rank, "relative singular value threshold");
  app.add_option("--tol-span", o.tol.span, "span membership threshold");
  app.add_option("--tol-residual", o.tol.residual, "residual threshold");

  std::function<Outcome()> action;

  AlgebraArgs hil;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series coefficients");
  hil.attach(hilbert_cmd);
  hilbert_cmd->callback([&] {
    action = [&] { return Outcome{{{"hilbert", hilbert(hil.presentation(), hil.max_degree)}}, true}; };
  });

  AlgebraArgs chs;
  std::string ch_class = "1";
  long ch_rep = 1;
  auto* char_cmd = app.add_subcommand("charseries", "character series of one class, or all of them");
  chs.attach(char_cmd);
  char_cmd->add_option("--class", ch_class, "element such as e1, e1^2 e2 z, or 'all'");
  char_cmd->add_option("--rep", ch_rep, "index i of the simple representation V_i");
  char_cmd->callback([&] {
    action = [&] {
      const auto pres = chs.presentation();
      const auto rep = SimpleRep::standard(pres.p, ch_rep);
      if (ch_class == "all") return Outcome{to_json(character_table(pres, rep, chs.max_degree)), true};
      const auto g = parse_class(pres.p, ch_class);
      return Outcome{{{"class", h_name(g)}, {"coeffs", to_json(character_coeffs(pres, g, rep, chs.max_degree))}}, true};
    };
  });

  AlgebraArgs kos;
  std::string kos_class = "all";
  auto* kos_cmd = app.add_subcommand("koszul-check", "Ch_A(g,t)·Ch_(A!)*(g,−t) = 1 up to degree N");
  kos.attach(kos_cmd);
  kos_cmd->add_option("--class", kos_class, "element or 'all'");
  kos_cmd->callback([&] {
    action = [&] {
      const auto pres = kos.presentation();
      const auto pair = quadratic_dual(pres);
      GradedEngine a(pres);
      GradedEngine d(pair.dual);
      std::vector<HeisenbergElement> gs;
      if (kos_class == "all") {
        for (const auto& c : conjugacy_classes(pres.p)) gs.push_back(c.rep);
      } else {
        gs.push_back(parse_class(pres.p, kos_class));
      }
      Json rows = Json::array();
      bool ok = true;
      for (const auto& g : gs) {
        const auto res = koszul_residual(a, d, SimpleRep::standard(pres.p, 1), g, kos.max_degree);
        const bool zero = std::all_of(res.begin(), res.end(), [](const Cyclotomic& c) { return c.is_zero(); });
        rows.push_back({{"class", h_name(g)}, {"residual", to_json(res)}, {"check", zero}});
        ok = ok && zero;
      }
      return Outcome{{{"classes", rows}, {"dual_hilbert", d.hilbert(kos.max_degree)}, {"check", ok}}, ok};
    };
  });

  std::string cf_form = "example3", cf_t = "1", cf_a = "0", cf_b = "0", cf_point;
  std::size_t cf_n = 3;
  auto* cl_cmd = app.add_subcommand("clifford-strata", "rank and representation profile of a form at a point");
  cl_cmd->add_option("--form", cf_form, "example3, q5 or diagonal")->check(CLI::IsMember({"example3", "q5", "diagonal"}));
  cl_cmd->add_option("--t", cf_t, "example3 parameter");
  cl_cmd->add_option("--a", cf_a, "q5 parameter a");
  cl_cmd->add_option("--b", cf_b, "q5 parameter b");
  cl_cmd->add_option("--n", cf_n, "diagonal form size");
  cl_cmd->add_option("--point", cf_point, "comma-separated values of the central variables")->required();
  cl_cmd->callback([&] {
    action = [&] {
      const auto form = cf_form == "example3" ? example3_form(parse_rational(cf_t))
                        : cf_form == "q5"     ? q5_form(parse_rational(cf_a), parse_rational(cf_b))
                                              : diagonal_form(cf_n);
      std::vector<Scalar> pt;
      for (const auto& s : split(cf_point)) pt.push_back(parse_scalar(s));
      if (pt.size() != form.size()) {
        throw Error(ErrorCode::kArity, "point has " + std::to_string(pt.size()) + " values, form needs " +
                                           std::to_string(form.size()));
      }
      bool fl = o.mode == "float";
      if (o.mode == "auto") {
        for (const auto& s : pt) fl = fl || s.decimal;
      }
      std::vector<ComplexF> cpt;
      for (const auto& s : pt) cpt.emplace_back(s.value(), 0.0);
      const auto numeric = specialize_form(form, std::span<const ComplexF>(cpt));
      Json body;
      Json point = Json::array();
      for (const auto& s : pt) point.push_back(to_string(s.exact));
      body["point"] = point;
      int rank = 0;
      if (fl) {
        const auto nr = symmetric_rank(numeric, o.tol.rank);
        rank = static_cast<int>(nr.rank);
        body["margin"] = {{"kept_min_ratio", nr.kept_min_ratio}, {"dropped_max_ratio", nr.dropped_max_ratio}};
        body["mode"] = "float";
      } else {
        std::vector<Rational> ept;
        for (const auto& s : pt) ept.push_back(s.exact);
        rank = static_cast<int>(symmetric_rank(specialize_form(form, std::span<const Rational>(ept))));
        body["mode"] = "exact";
      }
      const auto prof = simple_profile(rank, static_cast<int>(form.size()));
      body["rank"] = rank;
      body["simple"] = {{"count", prof.simple_count}, {"dim", prof.simple_dim}};
      if (rank > 0) {
        const auto fat = fat_profile(rank);
        body["fat"] = {{"count", fat.fat_count}, {"multiplicity", fat.fat_multiplicity}};
      } else {
        body["fat"] = nullptr;
      }
      Json residuals = Json::array();
      bool ok = true;
      for (const auto& r : build_reps(numeric, rank, o.tol.rank)) {
        residuals.push_back(r.residual);
        ok = ok && r.residual < 1e-9;
      }
      body["residuals"] = residuals;
      return Outcome{body, ok};
    };
  });

  auto* s2 = app.add_subcommand("sklyanin2", "order-2 Sklyanin algebra toolkit for p = 5");
  s2->require_subcommand(1);
  CurveArgs cv;
  std::string grid = "1";
  int samples = 10;
  int od_p = 5;
  std::string od_params = "1,2,2";

  auto* s2_curve = s2->add_subcommand("curve", "real points of C′ over a grid of a values");
  s2_curve->add_option("--grid", grid, "comma-separated a values");
  s2_curve->callback([&] {
    action = [&] {
      std::vector<double> as;
      for (const auto& s : split(grid)) as.push_back(parse_scalar(s).value());
      Json pts = Json::array();
      for (const auto& cp : curve_points(as)) pts.push_back(to_json(cp));
      return Outcome{{{"points", pts}}, true};
    };
  });

  auto* s2_t = s2->add_subcommand("t", "t = (a³b − b³ − 2a²)/(a⁴ − ab² − 4b)");
  cv.attach(s2_t);
  s2_t->callback([&] {
    action = [&] {
      if (cv.b.empty()) {
        const auto cp = cv.point();
        const auto t = t_param(cp.a, cp.b);
        return Outcome{{{"a", cp.a}, {"b", cp.b}, {"t", t ? Json(*t) : Json("indeterminate")}}, true};
      }
      const Scalar a = parse_scalar(cv.a), b = parse_scalar(cv.b);
      if (float_mode(o, {a, b})) {
        const auto t = t_param(a.value(), b.value());
        return Outcome{{{"a", a.value()}, {"b", b.value()}, {"t", t ? Json(*t) : Json("indeterminate")}}, true};
      }
      const auto t = t_param(a.exact, b.exact);
      return Outcome{{{"a", to_json(a.exact)}, {"b", to_json(b.exact)}, {"t", t ? to_json(*t) : Json("indeterminate")}}, true};
    };
  });

  s2->add_subcommand("eliminate", "resultant in t and its division by C′")->callback([&] {
    action = [&] {
      const auto e = eliminate_t();
      return Outcome{to_json(e), e.check};
    };
  });

  auto* s2_minors = s2->add_subcommand("minors", "3×3 minors of Q on the orbit of (0,1,t,−t,−1)");
  cv.attach(s2_minors);
  s2_minors->callback([&] {
    action = [&] {
      const auto cp = cv.point();
      const auto r = point_module_check(cp, o.tol);
      Json body = to_json(r);
      body["point"] = to_json(cp);
      return Outcome{body, r.pass};
    };
  });

  auto* s2_ideal = s2->add_subcommand("ideal", "minor spans against u_j q_i and q_i q_j");
  cv.attach(s2_ideal);
  s2_ideal->callback([&] {
    action = [&] {
      const auto cp = cv.point();
      const auto r = minor_ideal_checks(cp.a, cp.b, o.tol);
      Json body = to_json(r);
      body["point"] = to_json(cp);
      return Outcome{body, r.deg6 && r.deg8};
    };
  });

  auto* s2_secant = s2->add_subcommand("secant", "Jacobian determinant of the secant quadrics against det Q");
  cv.attach(s2_secant);
  s2_secant->callback([&] {
    action = [&] {
      const auto cp = cv.point();
      const auto r = secant_check(cp);
      Json body = to_json(r);
      body["point"] = to_json(cp);
      return Outcome{body, r.residual < o.tol.span};
    };
  });

  auto* s2_onedim = s2->add_subcommand("onedim", "one-dimensional representations of cliffordC");
  s2_onedim->add_option("--p", od_p, "odd prime");
  s2_onedim->add_option("--params", od_params, "a_0,…,a_(p−1)/2");
  s2_onedim->callback([&] {
    action = [&] {
      Json reps = Json::array();
      for (const auto& y : onedim_reps(od_p, parse_list(od_params))) reps.push_back(to_json(y));
      return Outcome{{{"count", reps.size()}, {"reps", reps}}, true};
    };
  });

  auto* s2_strat = s2->add_subcommand("stratify", "rank strata of Q with their profiles");
  cv.attach(s2_strat);
  s2_strat->add_option("--samples", samples, "points per sampled stratum")->check(CLI::PositiveNumber);
  s2_strat->callback([&] {
    action = [&] {
      const auto cp = cv.point();
      const auto r = stratify(cp, samples, o.seed, o.tol);
      Json body = to_json(r);
      body["point"] = to_json(cp);
      return Outcome{body, r.pass};
    };
  });

  auto* s5 = app.add_subcommand("shioda5", "the surface S15 and the cycle fiber");
  s5->require_subcommand(1);
  std::string orbit_a = "1";
  int tt_samples = 20;
  s5->add_subcommand("minors", "the 10 minors of the 3×5 matrix")->callback([&] {
    action = [&] {
      Json minors = Json::array();
      for (const auto& m : s15_minors()) minors.push_back(to_text(m));
      return Outcome{{{"count", minors.size()}, {"minors", minors}}, true};
    };
  });
  auto* s5_orbit = s5->add_subcommand("orbit", "exact orbit of (0,1,a,−a,−1) against C_a and S15");
  s5_orbit->add_option("--a", orbit_a, "rational a");
  s5_orbit->callback([&] {
    action = [&] {
      const auto r = ca_orbit_check(parse_rational(orbit_a));
      return Outcome{to_json(r), r.pass};
    };
  });
  auto* s5_tt = s5->add_subcommand("two-torsion", "roots of the 2-torsion sextic lie on S15");
  s5_tt->add_option("--samples", tt_samples, "random (x1, x2) pairs")->check(CLI::PositiveNumber);
  s5_tt->callback([&] {
    action = [&] {
      const auto r = two_torsion_check(tt_samples, o.seed, o.tol);
      return Outcome{to_json(r), r.pass && r.control_pass};
    };
  });
  s5->add_subcommand("singular", "the 30 fixed points and their Jacobian ranks")->callback([&] {
    action = [&] {
      const auto r = singular_points_check(o.tol);
      return Outcome{to_json(r), r.pass};
    };
  });
  s5->add_subcommand("fiber", "cycle(5) against the cusp fibers")->callback([&] {
    action = [&] {
      const auto r = cycle_fiber_equivalence();
      return Outcome{to_json(r), r.pass};
    };
  });

  app.add_subcommand("selftest", "run the acceptance criteria")->callback([&] {
    action = [&] {
      const auto results = run_criteria(o.seed);
      Json body = criteria_json(results);
      return Outcome{body, body["pass"].get<bool>()};
    };
  });

  auto emit = [&](const Json& body) {
    std::ostringstream text;
    if (o.format == "json") {
      text << dump(body);
    } else if (body.contains("criteria")) {
      for (const auto& c : body["criteria"]) {
        text << "criterion " << c["id"].get<int>() << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
             << c["title"].get<std::string>() << "\n";
      }
    } else {
      render_text(body, "", text);
    }
    if (o.out.empty()) {
      out << text.str();
    } else {
      std::ofstream f(o.out);
      if (!f) throw Error(ErrorCode::kUsage, "cannot write " + o.out);
      f << text.str();
    }
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const std::string msg = e.what();
    if (o.format == "json") {
      out << dump(error_json("usage", msg));
    } else {
      err << "error [usage]: " << msg << "\n" << app.help();
    }
    return 1;
  }

  // Process-wide settings go back to their previous values on every exit path.
  struct Restore {
    unsigned threads = thread_count();
    bool cells = false;
    ~Restore() {
      set_thread_count(threads);
      if (cells) set_max_cells(-1.0);
    }
  } restore;
  try {
    set_thread_count(o.threads);
    if (o.max_cells > 0) {
      set_max_cells(o.max_cells);
      restore.cells = true;
    }
    const Outcome res = action();
    emit(res.body);
    return res.check ? 0 : 2;
  } catch (const Error& e) {
    if (o.format == "json") {
      out << dump(error_json(e.code_name(), e.what()));
    } else {
      err << "error [" << e.code_name() << "]: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    if (o.format == "json") {
      out << dump(error_json("internal", e.what()));
    } else {
      err << "error [internal]: " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace algtool
