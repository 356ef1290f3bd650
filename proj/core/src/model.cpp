#include "lgcy/model.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lgcy/error.hpp"

namespace lgcy {

namespace {
constexpr std::size_t kCharacterTableCap = 4096;
}

LGModel::LGModel(std::vector<int> c, int d) : weights(std::move(c)), degree(d) {
  if (weights.empty()) throw ModelError("model needs at least one variable");
  if (degree < 1) throw ModelError("degree must be positive");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    int cj = weights[j];
    if (cj < 1) throw ModelError("weight c_" + std::to_string(j + 1) + " must be positive");
    if (degree % cj != 0)
      throw ModelError("weight c_" + std::to_string(j + 1) + " = " + std::to_string(cj) +
                       " does not divide the degree " + std::to_string(degree));
  }
}

Rational LGModel::sum_q() const { return make_rational(sum_weights(), degree); }

int LGModel::sum_weights() const { return std::accumulate(weights.begin(), weights.end(), 0); }

long SymmetryGroup::encode(const std::vector<int>& a) const {
  long code = 0;
  for (std::size_t j = 0; j < a.size(); ++j) code += a[j] * stride_[j];
  return code;
}

SymmetryGroup::SymmetryGroup(LGModel model, std::vector<GroupElement> elems)
    : model_(std::move(model)), elems_(std::move(elems)) {
  const int n = model_.n_vars();
  std::sort(elems_.begin(), elems_.end());
  stride_.assign(static_cast<std::size_t>(n), 1);
  long total = 1;
  for (int j = n - 1; j >= 0; --j) {
    stride_[static_cast<std::size_t>(j)] = total;
    total *= model_.order(j);
  }
  code_to_index_.assign(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    code_to_index_[static_cast<std::size_t>(encode(elems_[i].a))] = static_cast<int>(i);

  id_ = index_of(GroupElement{std::vector<int>(static_cast<std::size_t>(n), 0)});
  std::vector<int> ja(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) ja[static_cast<std::size_t>(c)] = 1 % model_.order(c);
  j_ = index_of(GroupElement{ja});
  if (id_ < 0 || j_ < 0) throw ModelError("group is not admissible: it does not contain j");

  inv_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      int o = model_.order(c);
      b[static_cast<std::size_t>(c)] = (o - elems_[i].a[static_cast<std::size_t>(c)]) % o;
    }
    inv_[i] = index_of(GroupElement{b});
  }

  // Splitting: with c_1 = 1, j has order d on the first coordinate, so
  // Ḡ = {a_1 = 0} is a complement of ⟨j⟩.
  if (model_.weights[0] != 1)
    throw ModelError("splitting failure: the first weight must be 1 so that Ḡ can act trivially on x_1");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].a[0] == 0) gbar_.push_back(static_cast<int>(i));
  }
  gbar_pos_.assign(elems_.size(), -1);
  for (std::size_t p = 0; p < gbar_.size(); ++p) gbar_pos_[static_cast<std::size_t>(gbar_[p])] = static_cast<int>(p);
  if (gbar_.size() * static_cast<std::size_t>(model_.degree) != elems_.size())
    throw ModelError("splitting failure: |G| != |<j>| * |Gbar|");

  if (gbar_.size() <= kCharacterTableCap) build_characters();
}

SymmetryGroup SymmetryGroup::closure(const LGModel& model, const std::vector<GroupElement>& generators,
                                     std::size_t cap) {
  const int n = model.n_vars();
  std::vector<GroupElement> gens;
  std::vector<int> ja(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ja[static_cast<std::size_t>(j)] = 1 % model.order(j);
  gens.push_back(GroupElement{ja});
  for (const auto& g : generators) {
    if (static_cast<int>(g.a.size()) != n)
      throw ModelError("generator " + element_to_string(g) + " has the wrong number of entries");
    GroupElement r = g;
    for (int j = 0; j < n; ++j) {
      int o = model.order(j);
      int& x = r.a[static_cast<std::size_t>(j)];
      x = ((x % o) + o) % o;
    }
    gens.push_back(r);
  }

  long total = 1;
  for (int j = 0; j < n; ++j) {
    total *= model.order(j);
    if (static_cast<std::size_t>(total) > cap * 64 && static_cast<std::size_t>(total) > cap)
      throw ModelError("ambient group Π d/c_j exceeds the enumeration cap");
  }
  std::vector<long> stride(static_cast<std::size_t>(n), 1);
  for (int j = n - 2; j >= 0; --j) stride[static_cast<std::size_t>(j)] = stride[j + 1] * model.order(j + 1);
  auto code = [&](const std::vector<int>& a) {
    long c = 0;
    for (int j = 0; j < n; ++j) c += a[static_cast<std::size_t>(j)] * stride[static_cast<std::size_t>(j)];
    return c;
  };

  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::vector<GroupElement> elems;
  std::deque<GroupElement> frontier;
  GroupElement id{std::vector<int>(static_cast<std::size_t>(n), 0)};
  seen[static_cast<std::size_t>(code(id.a))] = 1;
  elems.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElement y = x;
      for (int j = 0; j < n; ++j) {
        auto jj = static_cast<std::size_t>(j);
        y.a[jj] = (y.a[jj] + g.a[jj]) % model.order(j);
      }
      auto c = static_cast<std::size_t>(code(y.a));
      if (seen[c]) continue;
      seen[c] = 1;
      elems.push_back(y);
      if (elems.size() > cap) throw ModelError("group order exceeds the cap of " + std::to_string(cap));
      frontier.push_back(std::move(y));
    }
  }
  return SymmetryGroup(model, std::move(elems));
}

SymmetryGroup SymmetryGroup::gmax(const LGModel& model, std::size_t cap) {
  const int n = model.n_vars();
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    total *= static_cast<std::size_t>(model.order(j));
    if (total > cap) throw ModelError("|G_max| exceeds the cap of " + std::to_string(cap));
  }
  std::vector<GroupElement> gens;
  for (int j = 0; j < n; ++j) {
    GroupElement e{std::vector<int>(static_cast<std::size_t>(n), 0)};
    e.a[static_cast<std::size_t>(j)] = 1;
    gens.push_back(e);
  }
  return closure(model, gens, cap);
}

int SymmetryGroup::index_of(const GroupElement& g) const {
  if (g.a.size() != stride_.size()) return -1;
  for (std::size_t j = 0; j < g.a.size(); ++j)
    if (g.a[j] < 0 || g.a[j] >= model_.order(static_cast<int>(j))) return -1;
  return code_to_index_[static_cast<std::size_t>(encode(g.a))];
}

int SymmetryGroup::mul(int x, int y) const {
  const auto& a = elems_[static_cast<std::size_t>(x)].a;
  const auto& b = elems_[static_cast<std::size_t>(y)].a;
  long c = 0;
  for (std::size_t j = 0; j < a.size(); ++j) c += ((a[j] + b[j]) % model_.order(static_cast<int>(j))) * stride_[j];
  return code_to_index_[static_cast<std::size_t>(c)];
}

int SymmetryGroup::inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }

int SymmetryGroup::pow(int x, long k) const {
  if (k < 0) return pow(inv(x), -k);
  int r = id_;
  int b = x;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Rational SymmetryGroup::m(int g, int coord) const {
  Rational r(elems_[static_cast<std::size_t>(g)].a[static_cast<std::size_t>(coord)] * model_.weights[static_cast<std::size_t>(coord)],
             model_.degree);
  r.canonicalize();
  return r;
}

long SymmetryGroup::coord_exponent(int g, int coord) const {
  return static_cast<long>(elems_[static_cast<std::size_t>(g)].a[static_cast<std::size_t>(coord)]) *
         model_.weights[static_cast<std::size_t>(coord)];
}

Classification SymmetryGroup::classify(int g) const {
  Classification c{true, 0, Rational(0), Rational(0)};
  for (int j = 0; j < model_.n_vars(); ++j) {
    Rational mj = m(g, j);
    if (sgn(mj) == 0) {
      c.narrow = false;
      ++c.fixed_rank;
    }
    c.age += mj;
  }
  c.det_twist = frac(c.age);
  return c;
}

bool SymmetryGroup::narrow(int g) const { return fixed_rank(g) == 0; }

int SymmetryGroup::fixed_rank(int g) const {
  int n = 0;
  for (int a : elems_[static_cast<std::size_t>(g)].a) n += (a == 0);
  return n;
}

Rational SymmetryGroup::age(int g) const { return classify(g).age; }

std::vector<int> SymmetryGroup::fixed_coords(int g) const {
  std::vector<int> out;
  const auto& a = elems_[static_cast<std::size_t>(g)].a;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] == 0) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> SymmetryGroup::narrow_elements() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (narrow(static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

int SymmetryGroup::r_of(int g) const { return elems_[static_cast<std::size_t>(g)].a[0]; }

int SymmetryGroup::gbar_of(int g) const { return mul(g, pow(j_, -r_of(g))); }

int SymmetryGroup::gbar_position(int g) const { return gbar_pos_[static_cast<std::size_t>(gbar_of(g))]; }

int SymmetryGroup::element_from_split(int r, int gbar_elem) const { return mul(pow(j_, r), gbar_elem); }

void SymmetryGroup::build_characters() {
  const int n = model_.n_vars();
  const int d = model_.degree;
  auto table_of = [&](const std::vector<int>& b) {
    std::vector<int> t(gbar_.size());
    for (std::size_t p = 0; p < gbar_.size(); ++p) {
      long e = 0;
      const auto& a = elems_[static_cast<std::size_t>(gbar_[p])].a;
      for (int j = 0; j < n; ++j)
        e += static_cast<long>(b[static_cast<std::size_t>(j)]) * a[static_cast<std::size_t>(j)] * model_.weights[static_cast<std::size_t>(j)];
      t[p] = static_cast<int>(((e % d) + d) % d);
    }
    return t;
  };
  auto intern = [&](const std::vector<int>& b) {
    auto t = table_of(b);
    auto it = char_index_.find(t);
    if (it != char_index_.end()) return std::make_pair(it->second, false);
    int id = static_cast<int>(chars_.size());
    chars_.push_back(GbarCharacter{b, t});
    char_index_.emplace(std::move(t), id);
    return std::make_pair(id, true);
  };

  intern(std::vector<int>(static_cast<std::size_t>(n), 0));
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (int j = 0; j < n; ++j) {
      std::vector<int> b = chars_[static_cast<std::size_t>(x)].rep;
      auto jj = static_cast<std::size_t>(j);
      b[jj] = (b[jj] + 1) % model_.order(j);
      auto [id, fresh] = intern(b);
      if (fresh) frontier.push_back(id);
    }
  }
  if (chars_.size() != gbar_.size()) throw MathError("character group order differs from |Gbar|");

  coord_char_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    b[static_cast<std::size_t>(j)] = 1;
    coord_char_[static_cast<std::size_t>(j)] = intern(b).first;
  }
  det_char_ = intern(std::vector<int>(static_cast<std::size_t>(n), 1)).first;

  std::size_t nc = chars_.size();
  char_add_.assign(nc * nc, -1);
  char_neg_.assign(nc, -1);
  for (std::size_t x = 0; x < nc; ++x) {
    std::vector<int> t(gbar_.size());
    for (std::size_t p = 0; p < t.size(); ++p) t[p] = (d - chars_[x].table[p]) % d;
    char_neg_[x] = char_index_.at(t);
    for (std::size_t y = 0; y < nc; ++y) {
      for (std::size_t p = 0; p < t.size(); ++p) t[p] = (chars_[x].table[p] + chars_[y].table[p]) % d;
      char_add_[x * nc + y] = char_index_.at(t);
    }
  }
}

int SymmetryGroup::char_add(int x, int y) const {
  if (chars_.empty()) throw ModelError("character table not built: |Gbar| too large");
  return char_add_[static_cast<std::size_t>(x) * chars_.size() + static_cast<std::size_t>(y)];
}

int SymmetryGroup::char_neg(int x) const {
  if (chars_.empty()) throw ModelError("character table not built: |Gbar| too large");
  return char_neg_[static_cast<std::size_t>(x)];
}

int SymmetryGroup::char_from_rep(const std::vector<int>& b) const {
  if (chars_.empty()) throw ModelError("character table not built: |Gbar| too large");
  if (b.size() != coord_char_.size()) throw ModelError("character exponent vector has the wrong length");
  int acc = trivial_character();
  for (std::size_t j = 0; j < b.size(); ++j) {
    long k = b[j];
    int c = k >= 0 ? coord_char_[j] : char_neg(coord_char_[j]);
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) acc = char_add(acc, c);
  }
  return acc;
}

long SymmetryGroup::character_exponent(long k, int zeta, int g) const {
  const long d = model_.degree;
  long e = static_cast<long>(r_of(g)) * (((k % d) + d) % d) +
           chars_[static_cast<std::size_t>(zeta)].table[static_cast<std::size_t>(gbar_position(g))];
  return e % d;
}

CycNum SymmetryGroup::character_value(long k, int zeta, int g) const {
  return CycNum::root_of_unity(static_cast<unsigned>(model_.degree), character_exponent(k, zeta, g));
}

StructuralPredicates SymmetryGroup::predicates() const {
  StructuralPredicates p{model_.sum_weights() == model_.degree, true, true};
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    int g = static_cast<int>(i);
    if (!is_integer(age(g))) p.in_sl = false;
    // O(d) = O(d, trivial): isotropy of any sector acts by ξ^{r d} times the
    // trivial Ḡ-character.
    if (fixed_rank(g) > 0 && !chars_.empty() && character_exponent(model_.degree, trivial_character(), g) != 0)
      p.convex_od = false;
  }
  return p;
}

std::string element_to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t j = 0; j < g.a.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(g.a[j]);
  }
  return s + ")";
}

}  // namespace lgcy
