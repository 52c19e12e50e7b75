#pragma once

#include <complex>
#include <vector>

#include "sgk/scalars.hpp"

namespace sgk {

// Complex samples on the torus [0,2pi)^2, N x N with N a power of two,
// row-major v[i*n + j] = f(x1 = 2pi i/n, x2 = 2pi j/n). Spectral derivatives.
// An optional secular linear part lin1*x1 + lin2*x2 carries winding maps;
// it participates only in addition, scaling and differentiation.
struct GridFn {
  int n = 0;
  std::vector<Complex> v;
  double lin1 = 0.0, lin2 = 0.0;

  using scalar = Complex;

  GridFn() = default;
  explicit GridFn(int n_) : n(n_), v(size_t(n_) * n_, Complex(0)) {}
  GridFn(int n_, Complex c) : n(n_), v(size_t(n_) * n_, c) {}

  bool is_zero() const {
    if (lin1 != 0.0 || lin2 != 0.0) return false;
    for (auto& x : v)
      if (x != Complex(0)) return false;
    return true;
  }
  bool has_linear() const { return lin1 != 0.0 || lin2 != 0.0; }

  Complex& at(int i, int j) { return v[size_t(i) * n + j]; }
  const Complex& at(int i, int j) const { return v[size_t(i) * n + j]; }

  GridFn operator+(const GridFn& o) const;
  GridFn operator-(const GridFn& o) const;
  GridFn operator-() const;
  GridFn operator*(const GridFn& o) const;  // rejects secular*secular etc.
  GridFn operator*(const Complex& s) const;

  GridFn derivative(int axis) const;  // spectral d/dx^axis
  GridFn conj() const;
  GridFn real_part() const;
  GridFn imag_part() const;

  // Pointwise inverse; requires no secular part and no zero samples.
  GridFn pointwise_inverse() const;

  // Trapezoidal (= spectral) integral over [0,2pi)^2; rejects secular parts.
  Complex integrate() const;

  // Zero-mean inverse Laplacian (Poisson solve), k=0 mode dropped.
  GridFn inv_laplacian_zero_mean() const;

  // Removes the k = 0 Fourier mode.
  GridFn zero_mean() const;
  Complex mean() const;

  double max_abs() const;

  // Sample shift by whole grid steps (exact torus translation).
  GridFn shifted(int di, int dj) const;
};

inline bool ring_is_zero(const GridFn& g) { return g.is_zero(); }
inline double abs_of(const GridFn& g) { return g.max_abs(); }

GridFn grid_const(int n, Complex c);
// f(x) = sum over modes of amp * exp(i (k1 x1 + k2 x2)); helper for scenes.
GridFn grid_mode(int n, int k1, int k2, Complex amp);
GridFn grid_cos(int n, int k1, int k2, double amp = 1.0, double phase = 0.0);
// Forward/backward 2-D FFT (unnormalized forward; backward divides by n^2).
void grid_fft(const GridFn& in, std::vector<Complex>& spec);
void grid_ifft(const std::vector<Complex>& spec, GridFn& out);

}  // namespace sgk
