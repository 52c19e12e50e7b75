#include "sgk/gridfn.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace sgk {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// FFTW plan cache per grid size. FFTW_ESTIMATE keeps planning deterministic.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  std::vector<Complex> buf;
};

PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PlanPair& p = cache[n];
  p.buf.resize(size_t(n) * n);
  auto* ptr = reinterpret_cast<fftw_complex*>(p.buf.data());
  p.fwd = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
  return p;
}

// Signed wavenumber for index k in [0,n): maps to [-n/2, n/2).
inline int signed_k(int k, int n) { return (k <= n / 2 - 1) ? k : k - n; }

void check_same(const GridFn& a, const GridFn& b) {
  if (a.n != b.n) throw ConfigError("GridFn: mixed grid sizes");
}

}  // namespace

GridFn GridFn::operator+(const GridFn& o) const {
  check_same(*this, o);
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = v[i] + o.v[i];
  r.lin1 = lin1 + o.lin1;
  r.lin2 = lin2 + o.lin2;
  return r;
}

GridFn GridFn::operator-(const GridFn& o) const { return *this + (-o); }

GridFn GridFn::operator-() const {
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = -v[i];
  r.lin1 = -lin1;
  r.lin2 = -lin2;
  return r;
}

GridFn GridFn::operator*(const GridFn& o) const {
  check_same(*this, o);
  if (has_linear() || o.has_linear())
    throw UnsupportedError("GridFn: product with a secular (winding) part is not representable");
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = v[i] * o.v[i];
  return r;
}

GridFn GridFn::operator*(const Complex& s) const {
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = v[i] * s;
  if (has_linear()) {
    if (s.imag() != 0.0)
      throw UnsupportedError("GridFn: complex scaling of a secular part");
    r.lin1 = lin1 * s.real();
    r.lin2 = lin2 * s.real();
  }
  return r;
}

GridFn GridFn::derivative(int axis) const {
  GridFn r(n);
  std::vector<Complex> spec;
  grid_fft(*this, spec);
  const Complex I(0, 1);
  for (int a = 0; a < n; a++) {
    for (int b = 0; b < n; b++) {
      int ka = signed_k(a, n), kb = signed_k(b, n);
      int k = (axis == 0) ? ka : kb;
      // Nyquist mode derivative is dropped (standard for real spectral data).
      if ((axis == 0 && a == n / 2) || (axis == 1 && b == n / 2)) {
        spec[size_t(a) * n + b] = 0;
      } else {
        spec[size_t(a) * n + b] *= I * double(k);
      }
    }
  }
  grid_ifft(spec, r);
  // secular part differentiates to a constant
  double c = (axis == 0) ? lin1 : lin2;
  if (c != 0.0)
    for (auto& x : r.v) x += c;
  return r;
}

GridFn GridFn::conj() const {
  if (has_linear()) {
    GridFn r = *this;
    for (auto& x : r.v) x = std::conj(x);
    return r;
  }
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = std::conj(v[i]);
  return r;
}

GridFn GridFn::real_part() const {
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = Complex(v[i].real(), 0);
  r.lin1 = lin1;
  r.lin2 = lin2;
  return r;
}

GridFn GridFn::imag_part() const {
  if (has_linear())
    throw UnsupportedError("GridFn: imag part of a secular field");
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) r.v[i] = Complex(v[i].imag(), 0);
  return r;
}

GridFn GridFn::pointwise_inverse() const {
  if (has_linear()) throw UnsupportedError("GridFn: inverse of a secular field");
  GridFn r(n);
  for (size_t i = 0; i < v.size(); i++) {
    if (v[i] == Complex(0)) throw SolverError("GridFn: pointwise inverse of a vanishing sample");
    r.v[i] = 1.0 / v[i];
  }
  return r;
}

Complex GridFn::integrate() const {
  if (has_linear())
    throw UnsupportedError("GridFn: integral of a secular (winding) field");
  Complex s(0);
  for (auto& x : v) s += x;
  return s * (two_pi * two_pi / double(v.size()));
}

Complex GridFn::mean() const {
  Complex s(0);
  for (auto& x : v) s += x;
  return s / double(v.size());
}

GridFn GridFn::zero_mean() const {
  Complex m = mean();
  GridFn r = *this;
  for (auto& x : r.v) x -= m;
  return r;
}

GridFn GridFn::inv_laplacian_zero_mean() const {
  if (has_linear()) throw UnsupportedError("GridFn: Poisson solve with secular part");
  GridFn r(n);
  std::vector<Complex> spec;
  grid_fft(*this, spec);
  for (int a = 0; a < n; a++) {
    for (int b = 0; b < n; b++) {
      int ka = signed_k(a, n), kb = signed_k(b, n);
      double k2 = double(ka) * ka + double(kb) * kb;
      auto& s = spec[size_t(a) * n + b];
      s = (k2 == 0.0) ? Complex(0) : s / (-k2);
    }
  }
  grid_ifft(spec, r);
  return r;
}

double GridFn::max_abs() const {
  double m = std::abs(lin1) + std::abs(lin2);
  for (auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

GridFn GridFn::shifted(int di, int dj) const {
  // Samples hold the periodic part; f(x+d) keeps the secular slope and adds
  // the constant slope*d to the periodic part.
  GridFn r(n);
  auto wrap = [&](int a) { return ((a % n) + n) % n; };
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) r.at(i, j) = at(wrap(i + di), wrap(j + dj));
  r.lin1 = lin1;
  r.lin2 = lin2;
  if (has_linear()) {
    double h = two_pi / n;
    Complex c(lin1 * di * h + lin2 * dj * h, 0);
    for (auto& x : r.v) x += c;
  }
  return r;
}

GridFn grid_const(int n, Complex c) { return GridFn(n, c); }

GridFn grid_mode(int n, int k1, int k2, Complex amp) {
  GridFn r(n);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      double ph = two_pi * (double(k1) * i + double(k2) * j) / n;
      r.at(i, j) = amp * std::polar(1.0, ph);
    }
  }
  return r;
}

GridFn grid_cos(int n, int k1, int k2, double amp, double phase) {
  GridFn r(n);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      double ph = two_pi * (double(k1) * i + double(k2) * j) / n;
      r.at(i, j) = amp * std::cos(ph + phase);
    }
  }
  return r;
}

void grid_fft(const GridFn& in, std::vector<Complex>& spec) {
  PlanPair& p = plans_for(in.n);
  p.buf = in.v;
  fftw_execute(p.fwd);
  spec = p.buf;
}

void grid_ifft(const std::vector<Complex>& spec, GridFn& out) {
  PlanPair& p = plans_for(out.n);
  p.buf = spec;
  fftw_execute(p.bwd);
  double inv = 1.0 / double(p.buf.size());
  out.v.resize(p.buf.size());
  for (size_t i = 0; i < p.buf.size(); i++) out.v[i] = p.buf[i] * inv;
}

}  // namespace sgk
