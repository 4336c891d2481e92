#include "algtool/graded.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

#include "algtool/error.hpp"
#include "algtool/parallel.hpp"

namespace algtool {

namespace {

int mod(long x, int p) {
  const long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

std::size_t ipow(int p, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::size_t>(p);
  return r;
}

std::atomic<double> g_max_cells{-1.0};

}  // namespace

std::size_t word_index(const std::vector<int>& word, int p) {
  std::size_t idx = 0;
  for (int letter : word) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(mod(letter, p));
  return idx;
}

std::vector<int> word_letters(std::size_t index, int p, int degree) {
  std::vector<int> w(degree);
  for (int l = degree; l-- > 0;) {
    w[l] = static_cast<int>(index % static_cast<std::size_t>(p));
    index /= static_cast<std::size_t>(p);
  }
  return w;
}

void Relation::add(const std::vector<int>& word, int p, const Rational& c) {
  if (static_cast<int>(word.size()) != degree) throw Error(ErrorCode::kArity, "relation word of the wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs.try_emplace(word_index(word, p), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs.erase(it);
  }
}

Presentation presentation_from_relations(std::string kind, int p, std::vector<Relation> relations,
                                         std::vector<std::string> params) {
  require_odd_prime(p);
  Presentation pres{std::move(kind), std::move(params), p, {}};
  for (auto& r : relations) {
    if (r.degree < 1) throw Error(ErrorCode::kRange, "relations must have positive degree");
    if (r.coeffs.empty()) continue;  // a vanishing combination imposes nothing
    const std::size_t cols = ipow(p, r.degree);
    if (r.coeffs.rbegin()->first >= cols) throw Error(ErrorCode::kRange, "relation word outside V^{⊗d}");
    pres.relations.push_back(std::move(r));
  }
  return pres;
}

namespace {

void add_commutators(std::vector<Relation>& rels, int p) {
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      Relation r;
      r.add({i, j}, p, Rational(1));
      r.add({j, i}, p, Rational(-1));
      rels.push_back(std::move(r));
    }
  }
}

std::vector<std::string> param_strings(const std::vector<Rational>& params) {
  std::vector<std::string> out;
  for (const auto& q : params) out.push_back(to_string(q));
  return out;
}

void require_count(const std::string& kind, const std::vector<Rational>& params, std::size_t n) {
  if (params.size() != n) {
    throw Error(ErrorCode::kArity, kind + " takes " + std::to_string(n) + " parameters, got " +
                                       std::to_string(params.size()));
  }
}

// a_0{x_{i+k}, x_{-i+k}} − a_i x_k² for 1 ≤ i ≤ (p−1)/2; when a_0 = 0 the
// relations become x_k² together with a_{i+1}{x_{i+k},x_{-i+k}} − a_i{x_{i+1+k},x_{-(i+1)+k}}.
std::vector<Relation> clifford_relations(int p, const std::vector<Rational>& a) {
  const int h = (p - 1) / 2;
  std::vector<Relation> rels;
  bool any = false;
  for (const auto& x : a) any = any || sgn(x) != 0;
  if (!any) throw Error(ErrorCode::kRange, "Clifford parameters must not all vanish");
  if (sgn(a[0]) != 0) {
    for (int i = 1; i <= h; ++i) {
      for (int k = 0; k < p; ++k) {
        Relation r;
        r.add({i + k, -i + k}, p, a[0]);
        r.add({-i + k, i + k}, p, a[0]);
        r.add({k, k}, p, -a[i]);
        rels.push_back(std::move(r));
      }
    }
    return rels;
  }
  for (int k = 0; k < p; ++k) {
    Relation r;
    r.add({k, k}, p, Rational(1));
    rels.push_back(std::move(r));
  }
  for (int i = 1; i < h; ++i) {
    for (int k = 0; k < p; ++k) {
      Relation r;
      r.add({i + k, -i + k}, p, a[i + 1]);
      r.add({-i + k, i + k}, p, a[i + 1]);
      r.add({i + 1 + k, -(i + 1) + k}, p, -a[i]);
      r.add({-(i + 1) + k, i + 1 + k}, p, -a[i]);
      rels.push_back(std::move(r));
    }
  }
  return rels;
}

}  // namespace

Presentation make_presentation(const std::string& kind, int p, const std::vector<Rational>& params) {
  std::vector<Relation> rels;
  if (kind == "polynomial") {
    require_odd_prime(p);
    require_count(kind, params, 0);
    add_commutators(rels, p);
  } else if (kind == "cycle") {
    require_odd_prime(p);
    if (p < 5) throw Error(ErrorCode::kModulus, "the cycle presentation needs p >= 5");
    require_count(kind, params, 0);
    add_commutators(rels, p);
    for (int i = 1; i <= (p - 3) / 2; ++i) {
      for (int k = 0; k < p; ++k) {
        Relation r;
        r.add({i + k, -i + k}, p, Rational(1));
        rels.push_back(std::move(r));
      }
    }
  } else if (kind == "sklyanin3") {
    p = 3;
    require_count(kind, params, 3);
    for (int k = 0; k < 3; ++k) {
      Relation r;
      r.add({k + 1, k + 2}, p, params[0]);
      r.add({k + 2, k + 1}, p, params[1]);
      r.add({k, k}, p, params[2]);
      rels.push_back(std::move(r));
    }
  } else if (kind == "cliffordC") {
    require_odd_prime(p);
    require_count(kind, params, static_cast<std::size_t>((p + 1) / 2));
    rels = clifford_relations(p, params);
  } else if (kind == "sklyanin5") {
    p = 5;
    require_count(kind, params, 2);
    rels = clifford_relations(5, {Rational(1), params[0], params[1]});
  } else if (kind == "curveCa") {
    p = 5;
    require_count(kind, params, 1);
    const Rational& a = params[0];
    for (int i = 0; i < 5; ++i) {
      Relation r;
      r.add({i, i}, p, a);
      r.add({i + 1, i - 1}, p, a * a);
      r.add({i + 2, i - 2}, p, Rational(-1));
      rels.push_back(std::move(r));
    }
    add_commutators(rels, p);
  } else {
    throw Error(ErrorCode::kUsage, "unknown presentation kind '" + kind + "'");
  }
  return presentation_from_relations(kind, p, std::move(rels), param_strings(params));
}

const Rational* DegreePiece::entry(std::size_t r, std::uint32_t c) const {
  const Row& row = rows[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t col) { return e.first < col; });
  if (it == row.end() || it->first != c) return nullptr;
  return &it->second;
}

double cell_estimate(int p, int n) { return n <= 0 ? 1.0 : std::pow(static_cast<double>(p), 2 * n - 1); }

double max_cells() {
  const double v = g_max_cells.load();
  if (v > 0) return v;
  if (const char* env = std::getenv("ALGTOOL_MAX_CELLS")) {
    char* end = nullptr;
    const double e = std::strtod(env, &end);
    if (end != env && e > 0) return e;
  }
  return 4e6;
}

void set_max_cells(double cells) { g_max_cells = cells; }

namespace {

// Row-echelon builder over ℚ with a reusable dense accumulator.
class Echelon {
 public:
  using Row = DegreePiece::Row;

  explicit Echelon(std::size_t cols) : acc_(cols), pivot_row_(cols, -1) {}

  void append_reduced(Row row) {
    pivot_row_[row.front().first] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
  }

  // Reduces `row` until its leading entry sits in a free column, then keeps it.
  void insert(const Row& row) {
    if (row.empty()) return;
    for (const auto& [c, v] : row) acc_[c] = v;
    std::size_t c = row.front().first;
    const std::size_t cols = acc_.size();
    for (; c < cols; ++c) {
      if (sgn(acc_[c]) == 0) continue;
      const long pr = pivot_row_[c];
      if (pr < 0) break;
      const Rational f = acc_[c];
      for (const auto& [cc, v] : rows_[static_cast<std::size_t>(pr)]) acc_[cc] -= f * v;
    }
    if (c == cols) return;
    const Rational inv = 1 / acc_[c];
    Row out;
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(acc_[j]) == 0) continue;
      out.emplace_back(static_cast<std::uint32_t>(j), acc_[j] * inv);
      acc_[j] = 0;
    }
    append_reduced(std::move(out));
  }

  // Full RREF: reduce rows in decreasing pivot order against already reduced rows.
  DegreePiece finish(int degree) {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return rows_[x].front().first > rows_[y].front().first;
    });
    const std::size_t cols = acc_.size();
    for (std::size_t idx : order) {
      Row& row = rows_[idx];
      bool needs = false;
      for (std::size_t t = 1; t < row.size(); ++t) {
        if (pivot_row_[row[t].first] >= 0) {
          needs = true;
          break;
        }
      }
      if (!needs) continue;
      for (const auto& [c, v] : row) acc_[c] = v;
      const std::size_t start = row.front().first + 1;
      for (std::size_t c = start; c < cols; ++c) {
        if (sgn(acc_[c]) == 0) continue;
        const long pr = pivot_row_[c];
        if (pr < 0) continue;
        const Rational f = acc_[c];
        for (const auto& [cc, v] : rows_[static_cast<std::size_t>(pr)]) acc_[cc] -= f * v;
      }
      Row out;
      for (std::size_t j = row.front().first; j < cols; ++j) {
        if (sgn(acc_[j]) == 0) continue;
        out.emplace_back(static_cast<std::uint32_t>(j), acc_[j]);
        acc_[j] = 0;
      }
      row = std::move(out);
    }
    std::sort(rows_.begin(), rows_.end(), [](const Row& x, const Row& y) { return x.front().first < y.front().first; });
    DegreePiece piece;
    piece.degree = degree;
    piece.ideal_rank = rows_.size();
    piece.quotient_dim = cols - rows_.size();
    for (const auto& r : rows_) piece.pivots.push_back(r.front().first);
    piece.rows = std::move(rows_);
    return piece;
  }

 private:
  std::vector<Rational> acc_;
  std::vector<long> pivot_row_;
  std::vector<Row> rows_;
};

}  // namespace

GradedEngine::GradedEngine(Presentation pres) : pres_(std::move(pres)) {
  DegreePiece zero;
  zero.degree = 0;
  zero.quotient_dim = 1;
  pieces_.push_back(std::move(zero));
}

void GradedEngine::ensure(int n) {
  if (n < 0) throw Error(ErrorCode::kRange, "degree must be non-negative");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(pieces_.size()) <= n) {
    pieces_.push_back(build(static_cast<int>(pieces_.size())));
  }
}

const DegreePiece& GradedEngine::piece(int n) {
  ensure(n);
  std::lock_guard<std::mutex> lock(mu_);
  return pieces_[static_cast<std::size_t>(n)];
}

DegreePiece GradedEngine::build(int n) {
  const int p = pres_.p;
  if (cell_estimate(p, n) > max_cells()) {
    throw Error(ErrorCode::kResource, "degree " + std::to_string(n) + " for p=" + std::to_string(p) + " needs about " +
                                          std::to_string(static_cast<long long>(cell_estimate(p, n))) +
                                          " cells, above the cap of " +
                                          std::to_string(static_cast<long long>(max_cells())));
  }
  const std::size_t cols = ipow(p, n);
  const std::size_t lower = ipow(p, n - 1);
  const DegreePiece& prev = pieces_[static_cast<std::size_t>(n - 1)];
  Echelon ech(cols);
  // V ⊗ I_{n-1}: disjoint column blocks of an RREF, hence already reduced.
  for (int x = 0; x < p; ++x) {
    const std::size_t offset = static_cast<std::size_t>(x) * lower;
    for (const auto& row : prev.rows) {
      DegreePiece::Row shifted;
      shifted.reserve(row.size());
      for (const auto& [c, v] : row) shifted.emplace_back(static_cast<std::uint32_t>(offset + c), v);
      ech.append_reduced(std::move(shifted));
    }
  }
  // I_{n-1} ⊗ V.
  for (const auto& row : prev.rows) {
    for (int x = 0; x < p; ++x) {
      DegreePiece::Row shifted;
      shifted.reserve(row.size());
      for (const auto& [c, v] : row) shifted.emplace_back(static_cast<std::uint32_t>(c * p + x), v);
      ech.insert(shifted);
    }
  }
  for (const auto& rel : pres_.relations) {
    if (rel.degree != n) continue;
    DegreePiece::Row row;
    for (const auto& [c, v] : rel.coeffs) row.emplace_back(static_cast<std::uint32_t>(c), v);
    ech.insert(row);
  }
  return ech.finish(n);
}

std::vector<long> GradedEngine::hilbert(int max_degree) {
  ensure(max_degree);
  std::vector<long> out;
  for (int n = 0; n <= max_degree; ++n) out.push_back(static_cast<long>(piece(n).quotient_dim));
  return out;
}

namespace {

void check_rep(const Presentation& pres, const HeisenbergElement& g, const SimpleRep& rep) {
  if (rep.linear) throw Error(ErrorCode::kRange, "character series need a p-dimensional representation");
  if (rep.p != pres.p || g.p != pres.p) {
    throw Error(ErrorCode::kPrimeMismatch, "group, representation, and presentation use different primes");
  }
}

// Exponent of ω in the scalar by which g multiplies the word with these letters.
int word_phase(const std::vector<int>& letters, const HeisenbergElement& g, const SimpleRep& rep) {
  long sum = 0;
  for (int l : letters) sum += l;
  const long n = static_cast<long>(letters.size());
  return mod(static_cast<long>(rep.index) * (static_cast<long>(g.b) * sum + n * g.k), g.p);
}

}  // namespace

Cyclotomic GradedEngine::ideal_trace(const HeisenbergElement& g, const SimpleRep& rep, int n) {
  check_rep(pres_, g, rep);
  const DegreePiece& pc = piece(n);
  const int p = pres_.p;
  std::vector<Rational> bins(p);
  for (std::size_t j = 0; j < pc.rows.size(); ++j) {
    auto letters = word_letters(pc.pivots[j], p, n);
    for (auto& l : letters) l = mod(l + g.a, p);  // π^{-1}(P_j)
    const auto src = static_cast<std::uint32_t>(word_index(letters, p));
    if (const Rational* v = pc.entry(j, src)) bins[word_phase(letters, g, rep)] += *v;
  }
  return Cyclotomic::from_raw(p, bins);
}

Cyclotomic GradedEngine::quotient_trace(const HeisenbergElement& g, const SimpleRep& rep, int n) {
  check_rep(pres_, g, rep);
  const DegreePiece& pc = piece(n);
  const int p = pres_.p;
  const std::size_t cols = ipow(p, n);
  std::vector<long> row_of(cols, -1);
  for (std::size_t j = 0; j < pc.pivots.size(); ++j) row_of[pc.pivots[j]] = static_cast<long>(j);
  std::vector<Rational> bins(p);
  for (std::size_t w = 0; w < cols; ++w) {
    if (row_of[w] >= 0) continue;
    const auto letters = word_letters(w, p, n);
    auto image = letters;
    for (auto& l : image) l = mod(l - g.a, p);
    const std::size_t target = word_index(image, p);
    const int phase = word_phase(letters, g, rep);
    if (target == w) {
      bins[phase] += 1;
    } else if (row_of[target] >= 0) {
      if (const Rational* v = pc.entry(static_cast<std::size_t>(row_of[target]), static_cast<std::uint32_t>(w))) {
        bins[phase] -= *v;
      }
    }
  }
  return Cyclotomic::from_raw(p, bins);
}

bool GradedEngine::is_stable(const HeisenbergElement& g, const SimpleRep& rep) {
  check_rep(pres_, g, rep);
  const int p = pres_.p;
  std::vector<int> degrees;
  for (const auto& r : pres_.relations) {
    if (std::find(degrees.begin(), degrees.end(), r.degree) == degrees.end()) degrees.push_back(r.degree);
  }
  for (int d : degrees) {
    const DegreePiece& pc = piece(d);
    const std::size_t cols = ipow(p, d);
    for (const auto& row : pc.rows) {
      std::vector<Cyclotomic> v(cols, Cyclotomic(p));
      for (const auto& [c, val] : row) {
        auto letters = word_letters(c, p, d);
        const int phase = word_phase(letters, g, rep);
        for (auto& l : letters) l = mod(l - g.a, p);
        v[word_index(letters, p)] += Cyclotomic::omega_power(p, phase) * val;
      }
      // Residual after removing the components along the echelon basis.
      std::vector<Cyclotomic> coef;
      coef.reserve(pc.rows.size());
      for (std::size_t j = 0; j < pc.rows.size(); ++j) coef.push_back(v[pc.pivots[j]]);
      for (std::size_t j = 0; j < pc.rows.size(); ++j) {
        if (coef[j].is_zero()) continue;
        for (const auto& [c, val] : pc.rows[j]) v[c] -= coef[j] * val;
      }
      for (const auto& x : v) {
        if (!x.is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<Cyclotomic> GradedEngine::character_coeffs(const HeisenbergElement& g, const SimpleRep& rep,
                                                       int max_degree) {
  check_rep(pres_, g, rep);
  ensure(max_degree);
  if (!is_stable(g, rep)) {
    throw Error(ErrorCode::kStability, "relations of " + pres_.kind + " are not stable under " + h_name(g));
  }
  const Cyclotomic chi = character(rep, g);
  std::vector<Cyclotomic> out;
  Cyclotomic power(pres_.p, Rational(1));
  for (int n = 0; n <= max_degree; ++n) {
    out.push_back(power - ideal_trace(g, rep, n));
    power *= chi;
  }
  return out;
}

DegreePiece ideal_piece(const Presentation& pres, int n) {
  GradedEngine engine(pres);
  return engine.piece(n);
}

std::vector<long> hilbert(const Presentation& pres, int max_degree) {
  GradedEngine engine(pres);
  return engine.hilbert(max_degree);
}

std::vector<Cyclotomic> character_coeffs(const Presentation& pres, const HeisenbergElement& g, const SimpleRep& rep,
                                         int max_degree) {
  GradedEngine engine(pres);
  return engine.character_coeffs(g, rep, max_degree);
}

CharacterTable character_table(GradedEngine& engine, const SimpleRep& rep, int max_degree) {
  engine.ensure(max_degree);
  CharacterTable table;
  table.max_degree = max_degree;
  for (const auto& c : conjugacy_classes(engine.presentation().p)) table.classes.push_back(c.rep);
  table.rows = parallel_map(table.classes.size(), [&](std::size_t i) {
    return engine.character_coeffs(table.classes[i], rep, max_degree);
  });
  return table;
}

CharacterTable character_table(const Presentation& pres, const SimpleRep& rep, int max_degree) {
  GradedEngine engine(pres);
  return character_table(engine, rep, max_degree);
}

}  // namespace algtool
