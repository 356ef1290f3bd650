#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/scalar.hpp"

namespace lgcy {

// Truncated polynomial ring T[H]/(H^cap).
template <class T>
class NilPoly {
 public:
  NilPoly() : c_(1) {}
  explicit NilPoly(int cap) : c_(checked(cap)) {}
  NilPoly(int cap, std::vector<T> coeffs) : c_(std::move(coeffs)) { c_.resize(checked(cap)); }

  static NilPoly constant(int cap, T v) {
    NilPoly p(cap);
    p.c_[0] = std::move(v);
    return p;
  }
  static NilPoly monomial(int cap, int k, T v) {
    NilPoly p(cap);
    if (k < cap) p.c_[static_cast<std::size_t>(k)] = std::move(v);
    return p;
  }

  int cap() const { return static_cast<int>(c_.size()); }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<T>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }

  NilPoly truncated(int cap) const {
    NilPoly p(cap);
    for (int k = 0; k < std::min(cap, this->cap()); ++k) p.c_[k] = c_[k];
    return p;
  }

  // Multiplication by H^k.
  NilPoly shifted(int k) const {
    NilPoly p(cap());
    for (int i = 0; i + k < cap(); ++i)
      if (i + k >= 0) p.c_[i + k] = c_[i];
    return p;
  }

  NilPoly& operator+=(const NilPoly& o) {
    same_cap(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  NilPoly& operator-=(const NilPoly& o) {
    same_cap(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  NilPoly& operator*=(const NilPoly& o) {
    same_cap(o);
    std::vector<T> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (scalar_is_zero(c_[i])) continue;
      for (std::size_t j = 0; i + j < c_.size(); ++j) {
        if (scalar_is_zero(o.c_[j])) continue;
        out[i + j] += c_[i] * o.c_[j];
      }
    }
    c_ = std::move(out);
    return *this;
  }
  NilPoly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  NilPoly operator-() const {
    NilPoly p(cap());
    for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i] = -c_[i];
    return p;
  }

  friend NilPoly operator+(NilPoly a, const NilPoly& b) { return a += b; }
  friend NilPoly operator-(NilPoly a, const NilPoly& b) { return a -= b; }
  friend NilPoly operator*(NilPoly a, const NilPoly& b) { return a *= b; }
  friend NilPoly operator*(NilPoly a, const T& s) { return a *= s; }
  friend NilPoly operator*(const T& s, NilPoly a) { return a *= s; }
  friend bool operator==(const NilPoly& a, const NilPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const NilPoly& a, const NilPoly& b) { return !(a == b); }

  // p · p⁻¹ = 1 modulo H^cap.
  NilPoly inverse() const {
    if (scalar_is_zero(c_[0])) throw MathError("nilpotent-only unit");
    T inv0 = scalar_inverse(c_[0]);
    NilPoly r(cap());
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      T s{};
      for (std::size_t k = 1; k <= n; ++k) {
        if (scalar_is_zero(c_[k])) continue;
        s += c_[k] * r.c_[n - k];
      }
      r.c_[n] = -(s * inv0);
    }
    return r;
  }

  template <class F>
  auto map(F f) const -> NilPoly<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return NilPoly<U>(cap(), std::move(out));
  }

 private:
  static std::size_t checked(int cap) {
    if (cap < 1) throw MathError("NilPoly cap must be positive");
    return static_cast<std::size_t>(cap);
  }
  void same_cap(const NilPoly& o) const {
    if (o.c_.size() != c_.size()) throw MathError("NilPoly cap mismatch");
  }

  std::vector<T> c_;
};

template <class T>
bool scalar_is_zero(const NilPoly<T>& p) {
  return p.is_zero();
}

// e^{aH} truncated at cap.
template <class T>
NilPoly<T> exp_linear(int cap, const T& a) {
  NilPoly<T> p(cap);
  T pw = scalar_from_rational<T>(Rational(1), a);
  for (int k = 0; k < cap; ++k) {
    p[k] = scalar_scale(pw, 1 / factorial(static_cast<unsigned>(k)));
    pw *= a;
  }
  return p;
}

// (aH)/(1 - e^{-aH}) truncated at cap, with rational a; Todd class of a line
// bundle with first Chern class aH.
NilPoly<Rational> todd_linear(int cap, const Rational& a);

template <class T>
std::string nilpoly_to_string(const NilPoly<T>& p) {
  std::string s;
  for (int k = 0; k < p.cap(); ++k) {
    if (scalar_is_zero(p[k])) continue;
    if (!s.empty()) s += " + ";
    std::string c;
    if constexpr (std::is_same_v<T, PrecComplex>) c = "(" + p[k].to_string(20) + ")";
    else if constexpr (std::is_same_v<T, CycNum>) c = "(" + p[k].to_string() + ")";
    else c = p[k].get_str();
    s += c;
    if (k == 1) s += "*H";
    if (k > 1) s += "*H^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace lgcy
