#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lgcy/cyclotomic.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

// Fermat potential w = Σ x_j^{d/c_j}.
struct LGModel {
  std::vector<int> weights;  // c_1..c_N
  int degree = 1;            // d

  LGModel() = default;
  LGModel(std::vector<int> c, int d);

  int n_vars() const { return static_cast<int>(weights.size()); }
  int order(int j) const { return degree / weights[static_cast<std::size_t>(j)]; }  // d / c_j
  Rational q(int j) const { return make_rational(weights[static_cast<std::size_t>(j)], degree); }
  Rational sum_q() const;
  int sum_weights() const;
};

// Exponent vector a with 0 ≤ a_j < d/c_j; m_j = a_j c_j / d.
struct GroupElement {
  std::vector<int> a;

  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.a == y.a; }
  friend bool operator<(const GroupElement& x, const GroupElement& y) { return x.a < y.a; }
};

struct Classification {
  bool narrow;
  int fixed_rank;  // n_g
  Rational age;
  Rational det_twist;  // age mod 1
};

struct StructuralPredicates {
  bool quasi_cy;
  bool in_sl;
  bool convex_od;
};

// A character of Ḡ, canonicalized by its value table: ζ(ḡ) = ξ_d^{table[i]}
// for the i-th element of Ḡ.
struct GbarCharacter {
  std::vector<int> rep;    // exponent vector b with ζ = Π e_j^{b_j}
  std::vector<int> table;  // exponents mod d, indexed like SymmetryGroup::gbar()
};

constexpr std::size_t kDefaultGroupCap = 1000000;

class SymmetryGroup {
 public:
  // Admissible group generated by `generators` and j. Throws ModelError when the
  // splitting G = ⟨j⟩ ⊕ Ḡ with Ḡ trivial on the first coordinate fails.
  static SymmetryGroup closure(const LGModel& model, const std::vector<GroupElement>& generators,
                               std::size_t cap = kDefaultGroupCap);
  static SymmetryGroup gmax(const LGModel& model, std::size_t cap = kDefaultGroupCap);

  const LGModel& model() const { return model_; }
  std::size_t size() const { return elems_.size(); }
  const GroupElement& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  int index_of(const GroupElement& g) const;
  int identity() const { return id_; }
  int j() const { return j_; }

  int mul(int x, int y) const;
  int inv(int x) const;
  int pow(int x, long k) const;

  Rational m(int g, int coord) const;
  Classification classify(int g) const;
  bool narrow(int g) const;
  int fixed_rank(int g) const;
  Rational age(int g) const;
  std::vector<int> fixed_coords(int g) const;
  std::vector<int> narrow_elements() const;

  // g = j^r ḡ.
  int r_of(int g) const;
  int gbar_of(int g) const;
  // Position of ḡ inside gbar().
  int gbar_position(int g) const;
  const std::vector<int>& gbar() const { return gbar_; }
  int element_from_split(int r, int gbar_elem) const;

  // Dual group of Ḡ.
  const std::vector<GbarCharacter>& characters() const { return chars_; }
  std::size_t num_characters() const { return chars_.size(); }
  int trivial_character() const { return 0; }
  int coordinate_character(int coord) const { return coord_char_[static_cast<std::size_t>(coord)]; }
  int det_character() const { return det_char_; }
  int char_add(int x, int y) const;
  int char_neg(int x) const;
  int char_sub(int x, int y) const { return char_add(x, char_neg(y)); }
  int char_from_rep(const std::vector<int>& b) const;

  // Exponent e of ξ_d^e for the G̃-character (k, ζ) at g.
  long character_exponent(long k, int zeta, int g) const;
  CycNum character_value(long k, int zeta, int g) const;
  // e^{2πi m_j(g)} and its exponent in ξ_d.
  long coord_exponent(int g, int coord) const;

  StructuralPredicates predicates() const;

 private:
  SymmetryGroup(LGModel model, std::vector<GroupElement> elems);
  void build_characters();
  long encode(const std::vector<int>& a) const;

  LGModel model_;
  std::vector<GroupElement> elems_;
  std::vector<long> stride_;   // mixed-radix encoding of exponent vectors
  std::vector<int> code_to_index_;  // -1 outside the group
  std::vector<int> inv_;
  int id_ = 0;
  int j_ = 0;
  std::vector<int> gbar_;
  std::vector<int> gbar_pos_;
  std::vector<GbarCharacter> chars_;
  std::map<std::vector<int>, int> char_index_;
  std::vector<int> char_add_;
  std::vector<int> char_neg_;
  std::vector<int> coord_char_;
  int det_char_ = 0;
};

std::string element_to_string(const GroupElement& g);

}  // namespace lgcy
