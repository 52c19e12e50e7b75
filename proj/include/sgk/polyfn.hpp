#pragma once

#include <map>
#include <utility>

#include "sgk/scalars.hpp"

namespace sgk {

// Multivariate polynomial in x1, x2 with exact rational coefficients and a
// maximum total degree; operations that would exceed the bound are rejected,
// never truncated.
struct PolyFn {
  int dmax = 8;
  std::map<std::pair<int, int>, Rational> c;  // (p,q) -> coeff of x1^p x2^q

  using scalar = Rational;

  PolyFn() = default;
  explicit PolyFn(int dmax_) : dmax(dmax_) {}
  PolyFn(int dmax_, Rational constant) : dmax(dmax_) {
    if (constant != 0) c[{0, 0}] = std::move(constant);
  }

  bool is_zero() const { return c.empty(); }
  bool has_linear() const { return false; }

  int degree() const {
    int d = -1;
    for (auto& [pq, a] : c) d = std::max(d, pq.first + pq.second);
    return d;
  }

  void insert_add(int p, int q, const Rational& a) {
    if (a == 0) return;
    if (p + q > dmax)
      throw DegreeOverflow("PolyFn: degree " + std::to_string(p + q) + " exceeds bound " +
                           std::to_string(dmax));
    auto key = std::make_pair(p, q);
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, a);
    } else {
      it->second += a;
      if (it->second == 0) c.erase(it);
    }
  }

  PolyFn operator+(const PolyFn& o) const {
    PolyFn r = *this;
    for (auto& [pq, a] : o.c) r.insert_add(pq.first, pq.second, a);
    return r;
  }
  PolyFn operator-() const {
    PolyFn r(dmax);
    for (auto& [pq, a] : c) r.c.emplace(pq, -a);
    return r;
  }
  PolyFn operator-(const PolyFn& o) const { return *this + (-o); }

  PolyFn operator*(const PolyFn& o) const {
    PolyFn r(dmax);
    for (auto& [pa, a] : c)
      for (auto& [pb, b] : o.c) r.insert_add(pa.first + pb.first, pa.second + pb.second, a * b);
    return r;
  }
  PolyFn operator*(const Rational& s) const {
    PolyFn r(dmax);
    if (s == 0) return r;
    for (auto& [pq, a] : c) r.c.emplace(pq, a * s);
    return r;
  }

  PolyFn derivative(int axis) const {
    PolyFn r(dmax);
    for (auto& [pq, a] : c) {
      int p = pq.first, q = pq.second;
      if (axis == 0 && p > 0) r.insert_add(p - 1, q, a * p);
      if (axis == 1 && q > 0) r.insert_add(p, q - 1, a * q);
    }
    return r;
  }

  bool is_constant() const {
    return c.empty() || (c.size() == 1 && c.begin()->first == std::make_pair(0, 0));
  }
  Rational constant_value() const {
    auto it = c.find({0, 0});
    return it == c.end() ? Rational(0) : it->second;
  }

  Rational eval(const Rational& x1, const Rational& x2) const {
    Rational s(0);
    for (auto& [pq, a] : c) {
      Rational t = a;
      for (int i = 0; i < pq.first; i++) t *= x1;
      for (int i = 0; i < pq.second; i++) t *= x2;
      s += t;
    }
    return s;
  }

  // Composition f(u(x), w(x)); exact, degree-checked.
  PolyFn compose(const PolyFn& u, const PolyFn& w) const {
    PolyFn r(dmax);
    for (auto& [pq, a] : c) {
      PolyFn t(dmax, a);
      for (int i = 0; i < pq.first; i++) t = t * u;
      for (int i = 0; i < pq.second; i++) t = t * w;
      r = r + t;
    }
    return r;
  }

  double max_abs() const {
    double m = 0;
    for (auto& [pq, a] : c) m = std::max(m, abs_of(a));
    return m;
  }
};

inline bool ring_is_zero(const PolyFn& p) { return p.is_zero(); }
inline double abs_of(const PolyFn& p) { return p.max_abs(); }

// Declared integration box [lo,hi]^2 for the poly backend.
struct PolyBox {
  Rational lo = 0, hi = 1;
};

// Exact integral over the declared box.
inline Rational poly_integrate(const PolyFn& f, const PolyBox& box) {
  Rational s(0);
  for (auto& [pq, a] : f.c) {
    auto power_int = [&](int p) {
      Rational h = box.hi, l = box.lo, hp = 1, lp = 1;
      for (int i = 0; i <= p; i++) {
        hp *= h;
        lp *= l;
      }
      return (hp - lp) / (p + 1);
    };
    s += a * power_int(pq.first) * power_int(pq.second);
  }
  return s;
}

inline PolyFn poly_const(int dmax, Rational v) { return PolyFn(dmax, std::move(v)); }
inline PolyFn poly_coord(int dmax, int axis) {
  PolyFn r(dmax);
  r.insert_add(axis == 0 ? 1 : 0, axis == 0 ? 0 : 1, Rational(1));
  return r;
}

}  // namespace sgk
