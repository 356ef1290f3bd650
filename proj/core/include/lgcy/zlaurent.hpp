#pragma once

#include <functional>
#include <map>

#include "lgcy/error.hpp"
#include "lgcy/scalar.hpp"

namespace lgcy {

// Finitely supported Laurent series Σ_k a_k z^k. Coefficients are created only
// by copying existing values, so T needs no meaningful default constructor.
template <class T>
class ZLaurent {
 public:
  ZLaurent() = default;
  static ZLaurent monomial(int k, T v) {
    ZLaurent r;
    r.add(k, v);
    return r;
  }

  const std::map<int, T>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const T* coefficient(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? nullptr : &it->second;
  }
  int min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
  int max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  void add(int k, const T& v) {
    if (scalar_is_zero(v)) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, v);
      return;
    }
    it->second += v;
    if (scalar_is_zero(it->second)) t_.erase(it);
  }

  ZLaurent& operator+=(const ZLaurent& o) {
    for (const auto& [k, v] : o.t_) add(k, v);
    return *this;
  }
  ZLaurent& operator-=(const ZLaurent& o) {
    for (const auto& [k, v] : o.t_) add(k, -v);
    return *this;
  }
  ZLaurent operator-() const {
    ZLaurent r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, T(-v));
    return r;
  }
  friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
  friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
  friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent r;
    for (const auto& [ka, va] : a.t_)
      for (const auto& [kb, vb] : b.t_) r.add(ka + kb, va * vb);
    return r;
  }
  template <class S>
  ZLaurent scaled(const S& s) const {
    ZLaurent r;
    for (const auto& [k, v] : t_) r.add(k, v * s);
    return r;
  }
  // z ↦ -z.
  ZLaurent reflected() const {
    ZLaurent r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, (k % 2 == 0) ? T(v) : T(-v));
    return r;
  }
  ZLaurent shifted(int k) const {
    ZLaurent r;
    for (const auto& [e, v] : t_) r.t_.emplace(e + k, v);
    return r;
  }
  friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const ZLaurent& a, const ZLaurent& b) { return !(a == b); }

  template <class F>
  auto map(F f) const -> ZLaurent<decltype(f(std::declval<const T&>()))> {
    ZLaurent<decltype(f(std::declval<const T&>()))> r;
    for (const auto& [k, v] : t_) r.add(k, f(v));
    return r;
  }

 private:
  std::map<int, T> t_;
};

template <class T>
bool scalar_is_zero(const ZLaurent<T>& x) {
  return x.is_zero();
}

}  // namespace lgcy
