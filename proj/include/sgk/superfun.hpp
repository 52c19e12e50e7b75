#pragma once

#include <array>

#include "sgk/graded.hpp"
#include "sgk/gridfn.hpp"
#include "sgk/polyfn.hpp"

namespace sgk {

// The super-function ring O on a chart R^{2|2} x B: a graded table from odd
// monomials (fiber etas and base betas in one mask) to coefficient functions.
template <class B>
using SuperFn = Graded<B>;

struct GridChart {
  int n = 32;
};
struct PolyChart {
  int dmax = 8;
  PolyBox box;
};

template <class B>
struct ChartOf;
template <>
struct ChartOf<GridFn> {
  using type = GridChart;
};
template <>
struct ChartOf<PolyFn> {
  using type = PolyChart;
};
template <class B>
using Chart = typename ChartOf<B>::type;

inline GridFn make_const(const GridChart& c, Complex v) { return GridFn(c.n, v); }
inline PolyFn make_const(const PolyChart& c, Rational v) { return PolyFn(c.dmax, std::move(v)); }
inline GridFn make_real_const(const GridChart& c, double v) { return GridFn(c.n, Complex(v, 0)); }
inline PolyFn make_real_const(const PolyChart& c, double v) {
  // exact: doubles are dyadic rationals
  return PolyFn(c.dmax, Rational(v));
}

template <class B>
SuperFn<B> sf_zero(const GenSet& g) {
  return SuperFn<B>(g);
}

template <class B>
SuperFn<B> sf_const(const GenSet& g, const Chart<B>& c, typename B::scalar v) {
  return SuperFn<B>(g, 0, make_const(c, v));
}

template <class B>
SuperFn<B> sf_one(const GenSet& g, const Chart<B>& c) {
  return sf_const<B>(g, c, typename B::scalar(1));
}

// The odd coordinate monomial eta^mask (fiber and/or base bits) as a superfunction.
template <class B>
SuperFn<B> sf_monomial(const GenSet& g, const Chart<B>& c, Mask m) {
  return SuperFn<B>(g, m, make_const(c, typename B::scalar(1)));
}

// Coefficientwise d/dx^a; the odd monomial structure is unchanged.
template <class B>
SuperFn<B> d_even(const SuperFn<B>& f, int axis) {
  SuperFn<B> r(f.gens);
  for (auto& [m, cf] : f.terms) r.insert_add(m, cf.derivative(axis));
  return r;
}

// Left derivative d/d eta^g for a fiber generator index g:
// d_eta(eta g) = g - eta d_eta g. Parity flips.
template <class B>
SuperFn<B> d_odd(const SuperFn<B>& f, int g) {
  SuperFn<B> r(f.gens);
  Mask bit = Mask(1) << g;
  for (auto& [m, cf] : f.terms) {
    if (!(m & bit)) continue;
    int s = left_derivative_sign(m, g);
    r.insert_add(m & ~bit, s < 0 ? -cf : cf);
  }
  return r;
}

// --- Super maps -------------------------------------------------------------

// Body part of the even coordinate images. Grid charts only support exact
// torus lattice translations; polynomial charts support arbitrary polynomial
// body maps.
struct GridBody {
  int di = 0, dj = 0;
  bool is_identity() const { return di == 0 && dj == 0; }
};
struct PolyBody {
  PolyFn x1, x2;
  bool identity_flag = false;
  bool is_identity() const { return identity_flag; }
};

template <class B>
struct BodyOf;
template <>
struct BodyOf<GridFn> {
  using type = GridBody;
};
template <>
struct BodyOf<PolyFn> {
  using type = PolyBody;
};

// A morphism of charts given by the pullback images of the target coordinates:
// even images x'^a = body^a + nil^a with nil purely of nonzero odd mask, and
// odd images as full superfunctions of odd parity.
template <class B>
struct SuperMap {
  GenSet gens;
  typename BodyOf<B>::type body;
  std::array<SuperFn<B>, 2> even_nil;
  std::array<SuperFn<B>, 2> odd_img;
};

template <class B>
SuperMap<B> identity_map(const GenSet& g, const Chart<B>& c);

template <>
inline SuperMap<GridFn> identity_map<GridFn>(const GenSet& g, const GridChart& c) {
  SuperMap<GridFn> m;
  m.gens = g;
  m.even_nil = {sf_zero<GridFn>(g), sf_zero<GridFn>(g)};
  m.odd_img = {sf_monomial<GridFn>(g, c, Mask(1) << 0), sf_monomial<GridFn>(g, c, Mask(1) << 1)};
  return m;
}
template <>
inline SuperMap<PolyFn> identity_map<PolyFn>(const GenSet& g, const PolyChart& c) {
  SuperMap<PolyFn> m;
  m.gens = g;
  m.body.x1 = poly_coord(c.dmax, 0);
  m.body.x2 = poly_coord(c.dmax, 1);
  m.body.identity_flag = true;
  m.even_nil = {sf_zero<PolyFn>(g), sf_zero<PolyFn>(g)};
  m.odd_img = {sf_monomial<PolyFn>(g, c, Mask(1) << 0), sf_monomial<PolyFn>(g, c, Mask(1) << 1)};
  return m;
}

namespace detail {

// c(body): substitution of the body map into a coefficient function.
inline GridFn body_substitute(const GridBody& b, const GridFn& c) {
  return c.shifted(b.di, b.dj);
}
inline PolyFn body_substitute(const PolyBody& b, const PolyFn& c) {
  if (b.is_identity()) return c;
  return c.compose(b.x1, b.x2);
}

}  // namespace detail

inline GridFn make_unit_like(const GridFn& f) { return GridFn(f.n, Complex(1, 0)); }
inline PolyFn make_unit_like(const PolyFn& f) { return PolyFn(f.dmax, Rational(1)); }

// Substitute the even images of m into a single coefficient function by finite
// Taylor expansion in the nilpotent part around the body:
//   c(body + nil) = sum_{p,q} nil1^p nil2^q (d1^p d2^q c)(body) / (p! q!).
template <class B>
SuperFn<B> taylor_substitute(const SuperMap<B>& m, const B& cf) {
  SuperFn<B> acc(m.gens);
  B dp = cf;  // d1^p cf
  long fact_p = 1;
  for (int p = 0;; p++) {
    if (p > 0) {
      dp = dp.derivative(0);
      fact_p *= p;
    }
    SuperFn<B> nil1p(m.gens);  // even_nil[0]^p, empty means "one"
    if (p > 0) {
      nil1p = m.even_nil[0];
      for (int i = 1; i < p; i++) nil1p = nil1p * m.even_nil[0];
      if (nil1p.is_zero()) break;
    }
    B dpq = dp;  // d2^q d1^p cf
    long fact_q = 1;
    for (int q = 0;; q++) {
      if (q > 0) {
        dpq = dpq.derivative(1);
        fact_q *= q;
      }
      SuperFn<B> nil2q(m.gens);
      if (q > 0) {
        nil2q = m.even_nil[1];
        for (int i = 1; i < q; i++) nil2q = nil2q * m.even_nil[1];
        if (nil2q.is_zero()) break;
      }
      B base = detail::body_substitute(m.body, dpq);
      typename B::scalar inv_fact = typename B::scalar(1) / typename B::scalar(fact_p * fact_q);
      SuperFn<B> term(m.gens, 0, base * inv_fact);
      if (p > 0) term = nil1p * term;
      if (q > 0) term = nil2q * term;
      acc = acc + term;
      if (q == 0 && m.even_nil[1].is_zero()) break;
    }
    if (p == 0 && m.even_nil[0].is_zero()) break;
  }
  return acc;
}

// Pullback homomorphism: substitute coordinate images into the odd-monomial
// expansion of f; even-image substitution by Taylor expansion around the body.
// Base generators are fixed (maps of families over B).
template <class B>
SuperFn<B> pullback(const SuperMap<B>& m, const SuperFn<B>& f) {
  if (!m.gens.compatible(f.gens)) throw ConfigError("pullback: generator sets differ");
  SuperFn<B> out(f.gens);
  Mask fiber = f.gens.fiber_mask();
  for (auto& [mask, cf] : f.terms) {
    Mask fpart = mask & fiber;
    Mask bpart = mask & ~fiber;
    SuperFn<B> ce = taylor_substitute(m, cf);
    if (bpart) ce = SuperFn<B>(f.gens, bpart, make_unit_like(cf)) * ce;
    // fiber bits ascend below all base bits, so the image factorizes as
    // (prod of odd images, ascending) * eta^base * c(X').
    Mask fp = fpart;
    while (fp) {
      // multiply images right-to-left to keep the ascending product order
      int g = 63 - std::countl_zero(fp);
      fp &= ~(Mask(1) << g);
      ce = m.odd_img[g] * ce;
    }
    out = out + ce;
  }
  return out;
}

// --- Underlying even manifold embeddings ------------------------------------

// Embedding i: R^{2|0} x B -> R^{2|2} x B with i# x = x and i# eta^a = xi^a,
// where the xi are fiber-free odd superfunctions on the even chart.
template <class B>
struct Embedding {
  GenSet gens;
  std::array<SuperFn<B>, 2> xi;
};

template <class B>
Embedding<B> trivial_embedding(const GenSet& g) {
  return Embedding<B>{g, {sf_zero<B>(g), sf_zero<B>(g)}};
}

template <class B>
bool is_normalized(const Embedding<B>& e) {
  return e.xi[0].is_zero() && e.xi[1].is_zero();
}

// Pullback along the embedding: kills fiber generators through the xi images.
template <class B>
SuperFn<B> restrict_to_even(const SuperFn<B>& f, const Embedding<B>& emb) {
  SuperMap<B> m;
  m.gens = emb.gens;
  m.even_nil = {sf_zero<B>(emb.gens), sf_zero<B>(emb.gens)};
  m.odd_img = {emb.xi[0], emb.xi[1]};
  if constexpr (std::is_same_v<B, PolyFn>) {
    m.body.identity_flag = true;
  }
  SuperFn<B> r = pullback(m, f);
  if (r.depends_on(f.gens.fiber_mask()))
    throw SolverError("restrict_to_even: fiber content survived restriction");
  return r;
}

// Returns the coordinate change  x~ = x,  eta~^b = eta^b - xi^b(x)  whose
// composition with emb kills all fiber generators in the odd images.
template <class B>
SuperMap<B> normalize_embedding(const Embedding<B>& emb, const Chart<B>& chart) {
  SuperMap<B> m = identity_map<B>(emb.gens, chart);
  m.odd_img[0] = m.odd_img[0] - emb.xi[0];
  m.odd_img[1] = m.odd_img[1] - emb.xi[1];
  return m;
}

// Composition m1 after m2: pullback(compose(m1,m2), f) == pullback(m2, pullback(m1, f)).
template <class B>
SuperMap<B> compose(const SuperMap<B>& m1, const SuperMap<B>& m2) {
  SuperMap<B> r;
  r.gens = m1.gens;
  for (int a = 0; a < 2; a++) r.odd_img[a] = pullback(m2, m1.odd_img[a]);
  if constexpr (std::is_same_v<B, GridFn>) {
    r.body.di = m1.body.di + m2.body.di;
    r.body.dj = m1.body.dj + m2.body.dj;
    // even image of m1 = (x + shift1) + nil1; substitute m2's full even image
    for (int a = 0; a < 2; a++) r.even_nil[a] = pullback(m2, m1.even_nil[a]) + m2.even_nil[a];
  } else {
    for (int a = 0; a < 2; a++) {
      const PolyFn& bodya = (a == 0) ? m1.body.x1 : m1.body.x2;
      SuperFn<PolyFn> full = taylor_substitute(m2, bodya) + pullback(m2, m1.even_nil[a]);
      PolyFn b = full.coefficient(0);
      if (b.is_zero()) b = PolyFn(bodya.dmax);
      ((a == 0) ? r.body.x1 : r.body.x2) = b;
      SuperFn<PolyFn> nil = full;
      nil.terms.erase(Mask(0));
      r.even_nil[a] = nil;
    }
    r.body.identity_flag = m1.body.identity_flag && m2.body.identity_flag;
  }
  return r;
}

}  // namespace sgk
