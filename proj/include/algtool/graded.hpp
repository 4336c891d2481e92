#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "algtool/cyclotomic.hpp"
#include "algtool/heisenberg.hpp"
#include "algtool/rational.hpp"

namespace algtool {

/// Word x_{w_1}…x_{w_d} ↔ index Σ w_l p^{d-l}: the first letter is most significant.
std::size_t word_index(const std::vector<int>& word, int p);
std::vector<int> word_letters(std::size_t index, int p, int degree);

/// Homogeneous tensor of degree `degree`: word index → nonzero coefficient.
struct Relation {
  int degree = 2;
  std::map<std::size_t, Rational> coeffs;

  void add(const std::vector<int>& word, int p, const Rational& c);
};

/// T(V)/(relations) with V spanned by x_0..x_{p-1}. Coefficients lie in ℚ.
struct Presentation {
  std::string kind;
  std::vector<std::string> params;
  int p = 3;
  std::vector<Relation> relations;
};

/// Catalog kinds: "polynomial", "cycle", "sklyanin3" (a,b,c), "cliffordC"
/// (a_0..a_{(p-1)/2}), "sklyanin5" (a,b), "curveCa" (a). `p` is ignored by the
/// kinds whose prime is fixed.
Presentation make_presentation(const std::string& kind, int p, const std::vector<Rational>& params);

/// Wraps explicit relations; zero relations are dropped, an empty list is the free algebra.
Presentation presentation_from_relations(std::string kind, int p, std::vector<Relation> relations,
                                         std::vector<std::string> params = {});

/// Ideal degree piece: rows in reduced row-echelon form over ℚ, sorted by pivot.
struct DegreePiece {
  using Row = std::vector<std::pair<std::uint32_t, Rational>>;  // sorted by column

  int degree = 0;
  std::size_t ideal_rank = 0;
  std::size_t quotient_dim = 1;
  std::vector<Row> rows;
  std::vector<std::uint32_t> pivots;

  /// Entry of row r at column c (zero if absent).
  const Rational* entry(std::size_t r, std::uint32_t c) const;
};

/// Dense cells a degree-n reduction may occupy: p^(2n-1).
double cell_estimate(int p, int n);
/// ALGTOOL_MAX_CELLS when set, else 4e6; overridable at runtime.
double max_cells();
/// A non-positive value drops the override.
void set_max_cells(double cells);

/// Lazily extends ideal pieces degree by degree; safe to share across threads
/// once `ensure` has run up to the largest degree needed.
class GradedEngine {
 public:
  explicit GradedEngine(Presentation pres);

  const Presentation& presentation() const { return pres_; }
  const DegreePiece& piece(int n);
  void ensure(int n);

  std::vector<long> hilbert(int max_degree);

  /// χ_{A_n}(g) = χ_V(g)^n − tr(g | I_n) for n = 0..N.
  std::vector<Cyclotomic> character_coeffs(const HeisenbergElement& g, const SimpleRep& rep, int max_degree);

  /// tr(g | I_n) from the echelon basis.
  Cyclotomic ideal_trace(const HeisenbergElement& g, const SimpleRep& rep, int n);
  /// tr(g | A_n) computed independently on the normal words (non-pivot columns).
  Cyclotomic quotient_trace(const HeisenbergElement& g, const SimpleRep& rep, int n);

  /// True when every relation-degree ideal piece is mapped into itself by g.
  bool is_stable(const HeisenbergElement& g, const SimpleRep& rep);

 private:
  DegreePiece build(int n);

  Presentation pres_;
  std::deque<DegreePiece> pieces_;  // references stay valid as it grows
  std::mutex mu_;
};

DegreePiece ideal_piece(const Presentation& pres, int n);
std::vector<long> hilbert(const Presentation& pres, int max_degree);
std::vector<Cyclotomic> character_coeffs(const Presentation& pres, const HeisenbergElement& g, const SimpleRep& rep,
                                         int max_degree);

struct CharacterTable {
  int max_degree = 0;
  std::vector<HeisenbergElement> classes;
  std::vector<std::vector<Cyclotomic>> rows;

  bool operator==(const CharacterTable& o) const { return rows == o.rows && classes == o.classes; }
};

CharacterTable character_table(GradedEngine& engine, const SimpleRep& rep, int max_degree);
CharacterTable character_table(const Presentation& pres, const SimpleRep& rep, int max_degree);

}  // namespace algtool
