#pragma once

#include <string>
#include <vector>

#include "algtool/cyclotomic.hpp"
#include "algtool/linalg.hpp"

namespace algtool {

/// e1^a e2^b z^k in H_p, with e1 e2 = z e2 e1 and z central.
struct HeisenbergElement {
  int p = 3;
  int a = 0;
  int b = 0;
  int k = 0;

  static HeisenbergElement make(int p, long a, long b, long k);
  static HeisenbergElement identity(int p) { return make(p, 0, 0, 0); }
  static HeisenbergElement e1(int p) { return make(p, 1, 0, 0); }
  static HeisenbergElement e2(int p) { return make(p, 0, 1, 0); }
  static HeisenbergElement z(int p) { return make(p, 0, 0, 1); }

  bool is_central() const { return a == 0 && b == 0; }
  bool operator==(const HeisenbergElement&) const = default;
};

HeisenbergElement h_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement h_inverse(const HeisenbergElement& g);
HeisenbergElement h_pow(const HeisenbergElement& g, long n);

/// "1", "e1", "e1^2 e2 z^3", ...
std::string h_name(const HeisenbergElement& g);
/// Inverse of h_name; also accepts "z^k", "e2" and the like.
HeisenbergElement h_parse(int p, const std::string& text);

/// Irreducible representation of H_p: either the p-dimensional V_i
/// (z acting by ω^i) or the 1-dimensional χ_{a,b}(e1^c e2^d z^k) = ω^{ac+bd}.
struct SimpleRep {
  int p = 3;
  int index = 1;  // i for V_i; unused for linear characters
  bool linear = false;
  int a = 0;
  int b = 0;

  static SimpleRep standard(int p, long i);
  static SimpleRep character(int p, long a, long b);
  int dim() const { return linear ? 1 : p; }
};

/// ρ(g) as a dim×dim matrix; for V_i, ρ(g) x_j = ω^{i(b j + k)} x_{j-a}.
DenseMatrix<Cyclotomic> rep_matrix(const SimpleRep& rep, const HeisenbergElement& g);
Cyclotomic character(const SimpleRep& rep, const HeisenbergElement& g);

/// ρ(g)·v for V_i on coordinate vectors.
std::vector<Cyclotomic> rep_apply(const SimpleRep& rep, const HeisenbergElement& g, const std::vector<Cyclotomic>& v);
std::vector<ComplexF> rep_apply(const SimpleRep& rep, const HeisenbergElement& g, const std::vector<ComplexF>& v);

struct ConjugacyClass {
  HeisenbergElement rep;
  int size = 1;
};

/// z^0..z^{p-1} first, then e1^a e2^b for (a,b) ≠ (0,0) in lexicographic order.
std::vector<ConjugacyClass> conjugacy_classes(int p);

/// Σ_g χ_V(g)·conj(χ_W(g)) over the whole group.
Cyclotomic character_inner_product(const SimpleRep& v, const SimpleRep& w);

/// Divides by the first nonzero coordinate.
std::vector<Cyclotomic> normalize_projective(std::vector<Cyclotomic> v);

/// The p eigenlines of ρ(g) for non-central g, normalised; throws for central g.
std::vector<std::vector<Cyclotomic>> projective_fixed_points(const SimpleRep& rep, const HeisenbergElement& g);

/// Generators e2 and e1 e2^b (0 ≤ b < p) of the p+1 cyclic subgroups of Z_p × Z_p.
std::vector<HeisenbergElement> cyclic_subgroup_generators(int p);

/// Fixed points of every cyclic subgroup, deduplicated, in generator order.
std::vector<std::vector<Cyclotomic>> all_fixed_points(const SimpleRep& rep);

}  // namespace algtool
