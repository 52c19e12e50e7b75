#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgk {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Errors, named per module contract.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(double x) { return x == 0.0; }
inline bool ring_is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }

inline double to_double(const Rational& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

inline double abs_of(const Rational& x) { return std::abs(static_cast<double>(x)); }
inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const Complex& x) { return std::abs(x); }

inline std::string scalar_to_string(const Rational& x) {
  return x.str();
}
inline std::string scalar_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}
inline std::string scalar_to_string(const Complex& x) {
  if (x.imag() == 0.0) return scalar_to_string(x.real());
  return "(" + scalar_to_string(x.real()) + "+" + scalar_to_string(x.imag()) + "i)";
}

}  // namespace sgk
