#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <variant>

namespace subdirac {

enum class Backend { exact, floating };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

/// Complex number with arbitrary-precision rational real and imaginary parts.
struct GaussianRational {
  mpq_class re;
  mpq_class im;
};

/// A complex scalar living in exactly one backend.
///
/// Exact scalars are Gaussian rationals and never round. Floating scalars are
/// std::complex<double>. Arithmetic between different backends throws
/// Error("backend-mismatch"); the only way across is `promoted()`.
class Scalar {
 public:
  /// Exact zero.
  Scalar() : value_(GaussianRational{}) {}

  static Scalar exact(long re, long im = 0);
  static Scalar exact(const mpq_class& re, const mpq_class& im = 0);
  static Scalar rational(long num, long den);
  static Scalar floating(double re, double im = 0.0);
  static Scalar floating(std::complex<double> z);

  static Scalar zero(Backend b);
  static Scalar one(Backend b);
  static Scalar imag_unit(Backend b);
  /// Integer n in backend b.
  static Scalar integer(long n, Backend b);

  Backend backend() const noexcept {
    return std::holds_alternative<GaussianRational>(value_) ? Backend::exact
                                                            : Backend::floating;
  }
  bool is_exact() const noexcept { return backend() == Backend::exact; }

  const GaussianRational& exact_value() const;
  std::complex<double> float_value() const;
  /// Value as complex<double>, rounding exact values.
  std::complex<double> to_complex() const;

  /// exact -> floating; floating is returned unchanged.
  Scalar promoted() const;
  /// Converts to backend `b`. Floating -> exact throws "backend-mismatch".
  Scalar to(Backend b) const;

  double abs() const;
  /// Literal zero test (rational equality for exact, == 0.0 for floating).
  bool is_zero() const;
  Scalar conj() const;
  /// Real part sign, exact for the exact backend.
  int real_sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Same backend and bit-for-bit identical value. Used for term merging, not
  /// for numerical comparison.
  friend bool identical(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(GaussianRational v) : value_(std::move(v)) {}
  explicit Scalar(std::complex<double> v) : value_(v) {}

  std::variant<GaussianRational, std::complex<double>> value_;
};

/// Rational equality; both operands must be exact.
bool exact_equal(const Scalar& a, const Scalar& b);

/// Positive real square root in the floating backend.
Scalar sqrt_real(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace subdirac
