#include "lgcy/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lgcy/error.hpp"
#include "lgcy/precision.hpp"

namespace lgcy {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

int degree_of(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[i]) != 0) return i;
  return -1;
}

// Quotient and remainder over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  int db = degree_of(b);
  int da = degree_of(r);
  q.assign(da >= db ? da - db + 1 : 1, Rational(0));
  const Rational& lead = b[db];
  while (da >= db && da >= 0) {
    Rational f = r[da] / lead;
    q[da - db] = f;
    for (int i = 0; i <= db; ++i) r[da - db + i] -= f * b[i];
    da = degree_of(r);
  }
  trim(q);
  trim(r);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned order) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> memo;
  if (order == 0) throw MathError("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(order);
    if (it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Φ_e for every proper divisor e.
  std::vector<Integer> p(order + 1, Integer(0));
  p[0] = -1;
  p[order] = 1;
  for (unsigned e = 1; e < order; ++e) {
    if (order % e != 0) continue;
    std::vector<Integer> f = cyclotomic_polynomial(e);
    std::size_t df = f.size() - 1;
    std::size_t dp = p.size() - 1;
    std::vector<Integer> q(dp - df + 1, Integer(0));
    for (std::size_t k = dp + 1; k-- > df;) {
      Integer c = p[k];
      q[k - df] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= df; ++i) p[k - df + i] -= c * f[i];
    }
    p = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(order, p);
  return p;
}

CycField::CycField(unsigned order) : order_(order), poly_(cyclotomic_polynomial(order)) {
  phi_ = static_cast<unsigned>(poly_.size() - 1);
  pow_.reserve(order_);
  std::vector<Rational> cur(phi_, Rational(0));
  cur[0] = 1;
  for (unsigned k = 0; k < order_; ++k) {
    pow_.push_back(cur);
    // multiply by x and reduce the single overflowing coefficient
    std::vector<Rational> next(phi_ + 1, Rational(0));
    for (unsigned i = 0; i < phi_; ++i) next[i + 1] = cur[i];
    reduce(next);
    cur = std::move(next);
  }
}

std::shared_ptr<const CycField> CycField::of(unsigned order) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CycField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CycField>(order);
  cache.emplace(order, f);
  return f;
}

const std::vector<Rational>& CycField::power(long k) const {
  long m = k % static_cast<long>(order_);
  if (m < 0) m += order_;
  return pow_[static_cast<std::size_t>(m)];
}

void CycField::reduce(std::vector<Rational>& p) const {
  for (std::size_t i = p.size(); i-- > phi_;) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    for (unsigned t = 0; t <= phi_; ++t) p[i - phi_ + t] -= c * Rational(poly_[t]);
  }
  p.resize(phi_, Rational(0));
}

Rational scalar_inverse(const Rational& x) {
  if (sgn(x) == 0) throw MathError("division by zero");
  return 1 / x;
}

CycNum::CycNum(std::shared_ptr<const CycField> f, std::vector<Rational> c)
    : field_(std::move(f)), c_(std::move(c)) {
  normalize();
}

void CycNum::normalize() {
  if (!field_) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return;
  Rational v = c_.empty() ? Rational(0) : c_[0];
  field_.reset();
  c_.assign(1, v);
}

CycNum CycNum::root_of_unity(unsigned order, long k) {
  if (order <= 1) return CycNum(1);
  auto f = CycField::of(order);
  return CycNum(f, f->power(k));
}

CycNum CycNum::from_group_ring(unsigned order, const std::vector<Rational>& coeffs) {
  if (order <= 1) {
    Rational s(0);
    for (const auto& c : coeffs) s += c;
    return CycNum(s);
  }
  auto f = CycField::of(order);
  std::vector<Rational> acc(f->degree(), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    const auto& p = f->power(static_cast<long>(i));
    for (unsigned t = 0; t < f->degree(); ++t) acc[t] += coeffs[i] * p[t];
  }
  return CycNum(f, std::move(acc));
}

bool CycNum::is_zero() const { return !field_ && sgn(c_[0]) == 0; }

const Rational& CycNum::rational_value() const {
  if (field_) throw MathError("cyclotomic number is not rational: " + to_string());
  return c_[0];
}

CycNum CycNum::lifted(unsigned order) const {
  if (order == this->order() || order <= 1) return *this;
  if (order % this->order() != 0) throw MathError("cannot lift cyclotomic number to a non-multiple order");
  auto f = CycField::of(order);
  long step = static_cast<long>(order / this->order());
  std::vector<Rational> acc(f->degree(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& p = f->power(static_cast<long>(i) * step);
    for (unsigned t = 0; t < f->degree(); ++t) acc[t] += c_[i] * p[t];
  }
  CycNum out;
  out.field_ = f;
  out.c_ = std::move(acc);
  return out;  // deliberately not normalized: callers compare coefficient-wise
}

void CycNum::unify(CycNum& a, CycNum& b) {
  unsigned oa = a.order();
  unsigned ob = b.order();
  if (oa == ob) return;
  unsigned l = std::lcm(oa, ob);
  a = a.lifted(l);
  b = b.lifted(l);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (!o.field_ && !field_) {
    c_[0] += o.c_[0];
    return *this;
  }
  CycNum b = o;
  unify(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (!o.field_) {
    for (auto& c : c_) c *= o.c_[0];
    normalize();
    return *this;
  }
  if (!field_) {
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
  }
  CycNum b = o;
  unify(*this, b);
  std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += c_[i] * b.c_[j];
  }
  field_->reduce(prod);
  c_ = std::move(prod);
  normalize();
  return *this;
}

CycNum CycNum::conj() const {
  if (!field_) return *this;
  std::vector<Rational> acc(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& p = field_->power(-static_cast<long>(i));
    for (unsigned t = 0; t < field_->degree(); ++t) acc[t] += c_[i] * p[t];
  }
  return CycNum(field_, std::move(acc));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw MathError("division by zero in cyclotomic field");
  if (!field_) return CycNum(1 / c_[0]);
  // Extended Euclid: s*a + t*Φ = 1.
  QPoly phi(field_->cyclotomic_poly().begin(), field_->cyclotomic_poly().end());
  QPoly a = c_;
  trim(a);
  QPoly r0 = phi, r1 = a;
  QPoly s0{Rational(0)}, s1{Rational(1)};
  while (degree_of(r1) > 0) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Φ is irreducible and a ≠ 0 mod Φ.
  Rational k = r1[0];
  for (auto& c : s1) c /= k;
  field_->reduce(s1);
  return CycNum(field_, std::move(s1));
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order() == b.order()) return a.c_ == b.c_;
  CycNum x = a, y = b;
  CycNum::unify(x, y);
  return x.c_ == y.c_;
}

PrecComplex CycNum::evaluate(int digits) const {
  PrecComplex acc = PrecComplex::zero(digits);
  unsigned D = order();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    acc += PrecComplex::root_of_unity(static_cast<long>(i), D, digits) *
           PrecComplex::from_rational(c_[i], digits);
  }
  return acc;
}

std::string CycNum::to_string() const {
  if (!field_) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    if (!first) os << (sgn(v) < 0 ? " - " : " + ");
    else if (sgn(v) < 0) os << "-";
    Rational mag = abs(v);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "w" << order() << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

}  // namespace lgcy
