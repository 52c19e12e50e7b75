#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgk/scalars.hpp"

namespace sgk {

// Subsets of odd generators, one bit per generator, canonical ascending order.
using Mask = std::uint64_t;

// Generator universe of a finite Grassmann algebra Lambda_L.
// Index layout is fixed for the lifetime of the algebra:
//   [0, n_fiber)                      fiber generators e1, e2, ...
//   [n_fiber, n_fiber+n_base)         base generators  b1, b2, ...
//   [n_fiber+n_base, total)           reserved generators (internal solver probes)
struct GenSet {
  int n_fiber = 2;
  int n_base = 6;
  int n_reserved = 0;

  int total() const { return n_fiber + n_base + n_reserved; }
  Mask fiber_mask() const { return (n_fiber == 64 ? ~Mask(0) : (Mask(1) << n_fiber) - 1); }
  Mask base_mask() const {
    return ((Mask(1) << (n_fiber + n_base)) - 1) & ~fiber_mask();
  }
  Mask universe() const { return (Mask(1) << total()) - 1; }

  GenSet() = default;
  GenSet(int fiber, int base, int reserved = 0)
      : n_fiber(fiber), n_base(base), n_reserved(reserved) {
    if (total() > 62) throw ConfigError("GenSet: more than 62 generators");
  }

  // Compatible = same fiber/base layout; reserved headroom may differ.
  bool compatible(const GenSet& o) const {
    return n_fiber == o.n_fiber && n_base == o.n_base;
  }
  bool operator==(const GenSet& o) const {
    return n_fiber == o.n_fiber && n_base == o.n_base && n_reserved == o.n_reserved;
  }

  std::string label(int i) const {
    if (i < n_fiber) return "e" + std::to_string(i + 1);
    if (i < n_fiber + n_base) return "b" + std::to_string(i - n_fiber + 1);
    return "r" + std::to_string(i - n_fiber - n_base + 1);
  }
};

enum class Parity { Even, Odd, Mixed };

inline int mask_parity(Mask m) { return std::popcount(m) & 1; }

// Sign of eta^a . eta^b -> eta^{a|b}: (-1)^{#inversions}, inversions counted as
// pairs (i in a, j in b) with i > j. Caller guarantees a & b == 0.
inline int merge_sign(Mask a, Mask b) {
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inv += std::popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

// Sign factor for the left derivative d/d eta_g applied to eta^m (g in m):
// (-1)^{# generators in m below g}.
inline int left_derivative_sign(Mask m, int g) {
  int below = std::popcount(m & ((Mask(1) << g) - 1));
  return (below & 1) ? -1 : 1;
}

// Z2-graded sparse container over generator subsets. V is an even commuting
// coefficient (scalar or coefficient function); all odd structure lives in the
// masks. Values are immutable after construction in spirit: all operations
// return new values.
template <class V>
struct Graded {
  GenSet gens;
  std::map<Mask, V> terms;  // no zero values stored

  Graded() = default;
  explicit Graded(const GenSet& g) : gens(g) {}
  Graded(const GenSet& g, Mask m, V v) : gens(g) {
    if (!ring_is_zero(v)) terms.emplace(m, std::move(v));
  }

  bool is_zero() const { return terms.empty(); }

  void insert_add(Mask m, const V& v) {
    if (ring_is_zero(v)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, v);
    } else {
      it->second = it->second + v;
      if (ring_is_zero(it->second)) terms.erase(it);
    }
  }

  Parity parity() const {
    bool has_even = false, has_odd = false;
    for (auto& [m, v] : terms) (mask_parity(m) ? has_odd : has_even) = true;
    if (has_even && has_odd) return Parity::Mixed;
    return has_odd ? Parity::Odd : Parity::Even;
  }
  bool homogeneous(int p) const {
    for (auto& [m, v] : terms)
      if (mask_parity(m) != p) return false;
    return true;
  }

  V coefficient(Mask m) const {
    auto it = terms.find(m);
    if (it != terms.end()) return it->second;
    return V{};
  }

  Graded operator+(const Graded& o) const {
    Graded r = *this;
    for (auto& [m, v] : o.terms) r.insert_add(m, v);
    return r;
  }
  Graded operator-() const {
    Graded r(gens);
    for (auto& [m, v] : terms) r.terms.emplace(m, -v);
    return r;
  }
  Graded operator-(const Graded& o) const { return *this + (-o); }

  Graded operator*(const Graded& o) const {
    if (!gens.compatible(o.gens))
      throw ConfigError("Graded: product over mismatched generator sets");
    Graded r(gens);
    for (auto& [ma, va] : terms) {
      for (auto& [mb, vb] : o.terms) {
        if (ma & mb) continue;  // repeated generator
        int s = merge_sign(ma, mb);
        V p = va * vb;
        if (s < 0) p = -p;
        r.insert_add(ma | mb, p);
      }
    }
    return r;
  }

  template <class S>
  Graded scaled(const S& s) const {
    Graded r(gens);
    for (auto& [m, v] : terms) {
      V p = v * s;
      if (!ring_is_zero(p)) r.terms.emplace(m, std::move(p));
    }
    return r;
  }

  // Keep only terms whose mask intersected with `sel` equals `want`, and strip
  // `sel` bits from the result. With `sel` = fiber mask this extracts the
  // coefficient of a fiber monomial.
  Graded component(Mask sel, Mask want) const {
    Graded r(gens);
    for (auto& [m, v] : terms)
      if ((m & sel) == want) r.terms.emplace(m & ~sel, v);
    return r;
  }

  // Coefficient of the monomial eta^g (a single reserved top generator is the
  // intended use): A with  f = A*eta^g + (terms without g). Valid as written
  // only when g is the highest occupied index.
  Graded strip_top_generator(int g) const {
    Mask bit = Mask(1) << g;
    Graded r(gens);
    for (auto& [m, v] : terms) {
      if (!(m & bit)) continue;
      r.terms.emplace(m & ~bit, v);
    }
    return r;
  }

  bool depends_on(Mask bits) const {
    for (auto& [m, v] : terms)
      if (m & bits) return true;
    return false;
  }

  double max_abs() const {
    double r = 0;
    for (auto& [m, v] : terms) r = std::max(r, abs_of(v));
    return r;
  }
};

template <class V>
Graded<V> operator*(const V& s, const Graded<V>& g) {
  return g.scaled(s);
}

// An element of Lambda_L with scalar coefficients.
template <class R>
using GrassmannElement = Graded<R>;

template <class R>
GrassmannElement<R> grassmann_one(const GenSet& g) {
  return GrassmannElement<R>(g, 0, R(1));
}

template <class R>
int grading_degree(const GrassmannElement<R>& x) {
  int d = 0;
  for (auto& [m, v] : x.terms) d = std::max(d, std::popcount(m));
  return d;
}

}  // namespace sgk
