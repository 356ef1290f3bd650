#pragma once

#include <map>
#include <string>

#include "lgcy/nilpoly.hpp"

namespace lgcy {

// Σ_k p_k(H) e^{kλ}: exponential polynomials in an equivariant parameter λ
// with coefficients in T[H]/(H^cap). Zero coefficients are never stored, so
// equality is coefficient-wise.
template <class T>
class ExpPoly {
 public:
  explicit ExpPoly(int cap = 1) : cap_(cap) {}

  static ExpPoly term(long k, NilPoly<T> p) {
    ExpPoly e(p.cap());
    e.add_term(k, std::move(p));
    return e;
  }

  int cap() const { return cap_; }
  const std::map<long, NilPoly<T>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(long k, const NilPoly<T>& p) {
    if (p.cap() != cap_) throw MathError("ExpPoly cap mismatch");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!p.is_zero()) terms_.emplace(k, p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }

  ExpPoly& operator+=(const ExpPoly& o) {
    for (const auto& [k, p] : o.terms_) add_term(k, p);
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& o) {
    for (const auto& [k, p] : o.terms_) add_term(k, -p);
    return *this;
  }
  ExpPoly operator-() const {
    ExpPoly r(cap_);
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
    return r;
  }
  ExpPoly& operator*=(const T& s) {
    if (scalar_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, p] : terms_) p *= s;
    return *this;
  }

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const T& s) { return a *= s; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r(a.cap_);
    for (const auto& [ka, pa] : a.terms_)
      for (const auto& [kb, pb] : b.terms_) r.add_term(ka + kb, pa * pb);
    return r;
  }
  friend ExpPoly operator*(const ExpPoly& a, const NilPoly<T>& p) { return a * term(0, p); }
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.cap_ == b.cap_ && a.terms_ == b.terms_; }
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

  // Substitutes e^λ = t.
  NilPoly<T> evaluate_at_exp(const T& t) const {
    NilPoly<T> acc(cap_);
    for (const auto& [k, p] : terms_) {
      T w = scalar_from_rational<T>(Rational(1), t);
      T base = k >= 0 ? t : scalar_inverse(t);
      for (long i = 0; i < (k >= 0 ? k : -k); ++i) w *= base;
      acc += p * w;
    }
    return acc;
  }

  // Setting λ = 0.
  NilPoly<T> non_equivariant() const {
    NilPoly<T> acc(cap_);
    for (const auto& [k, p] : terms_) acc += p;
    return acc;
  }

 private:
  int cap_;
  std::map<long, NilPoly<T>> terms_;
};

// e^{k(H+λ)}.
template <class T>
ExpPoly<T> exp_h_lambda(int cap, long k) {
  return ExpPoly<T>::term(k, exp_linear<T>(cap, T(Rational(k))));
}

template <class T>
bool scalar_is_zero(const ExpPoly<T>& e) {
  return e.is_zero();
}

template <class T>
std::string exppoly_to_string(const ExpPoly<T>& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [k, p] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += "[" + nilpoly_to_string(p) + "]";
    if (k != 0) s += "*e^(" + std::to_string(k) + "L)";
  }
  return s;
}

}  // namespace lgcy
