#include "subdirac/scalar.hpp"

#include <cmath>
#include <ostream>

#include "subdirac/error.hpp"

namespace subdirac {

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend backend_from_string(const std::string& name) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  throw Error("unknown-backend", name);
}

Scalar Scalar::exact(long re, long im) {
  return Scalar(GaussianRational{mpq_class(re), mpq_class(im)});
}

Scalar Scalar::exact(const mpq_class& re, const mpq_class& im) {
  return Scalar(GaussianRational{re, im});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("division-by-zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(GaussianRational{q, mpq_class(0)});
}

Scalar Scalar::floating(double re, double im) { return Scalar(std::complex<double>(re, im)); }
Scalar Scalar::floating(std::complex<double> z) { return Scalar(z); }

Scalar Scalar::zero(Backend b) { return integer(0, b); }
Scalar Scalar::one(Backend b) { return integer(1, b); }

Scalar Scalar::imag_unit(Backend b) {
  return b == Backend::exact ? exact(0, 1) : floating(0.0, 1.0);
}

Scalar Scalar::integer(long n, Backend b) {
  return b == Backend::exact ? exact(n) : floating(static_cast<double>(n));
}

const GaussianRational& Scalar::exact_value() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) return *q;
  throw Error("backend-mismatch", "exact value requested from a float scalar");
}

std::complex<double> Scalar::float_value() const {
  if (const auto* z = std::get_if<std::complex<double>>(&value_)) return *z;
  throw Error("backend-mismatch", "float value requested from an exact scalar");
}

std::complex<double> Scalar::to_complex() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return {q->re.get_d(), q->im.get_d()};
  }
  return std::get<std::complex<double>>(value_);
}

Scalar Scalar::promoted() const { return Scalar(to_complex()); }

Scalar Scalar::to(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::floating) return promoted();
  throw Error("backend-mismatch", "float scalars cannot be demoted to exact");
}

double Scalar::abs() const { return std::abs(to_complex()); }

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return sgn(q->re) == 0 && sgn(q->im) == 0;
  }
  const auto z = std::get<std::complex<double>>(value_);
  return z.real() == 0.0 && z.imag() == 0.0;
}

Scalar Scalar::conj() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return Scalar(GaussianRational{q->re, -q->im});
  }
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

int Scalar::real_sign() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) return sgn(q->re);
  const double re = std::get<std::complex<double>>(value_).real();
  return (re > 0.0) - (re < 0.0);
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) {
    throw Error("backend-mismatch", "mixed exact/float scalar arithmetic");
  }
}

}  // namespace

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return Scalar(GaussianRational{-q->re, -q->im});
  }
  return Scalar(-std::get<std::complex<double>>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(*this, o);
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(o.value_);
    q->re += r.re;
    q->im += r.im;
  } else {
    std::get<std::complex<double>>(value_) += std::get<std::complex<double>>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(*this, o);
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(o.value_);
    q->re -= r.re;
    q->im -= r.im;
  } else {
    std::get<std::complex<double>>(value_) -= std::get<std::complex<double>>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(*this, o);
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(o.value_);
    mpq_class re = q->re * r.re - q->im * r.im;
    mpq_class im = q->re * r.im + q->im * r.re;
    q->re = std::move(re);
    q->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) *= std::get<std::complex<double>>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(*this, o);
  if (o.is_zero()) throw Error("division-by-zero");
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(o.value_);
    const mpq_class den = r.re * r.re + r.im * r.im;
    mpq_class re = (q->re * r.re + q->im * r.im) / den;
    mpq_class im = (q->im * r.re - q->re * r.im) / den;
    q->re = std::move(re);
    q->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) /= std::get<std::complex<double>>(o.value_);
  }
  return *this;
}

bool identical(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) return false;
  if (a.is_exact()) {
    const auto& x = std::get<GaussianRational>(a.value_);
    const auto& y = std::get<GaussianRational>(b.value_);
    return x.re == y.re && x.im == y.im;
  }
  return std::get<std::complex<double>>(a.value_) == std::get<std::complex<double>>(b.value_);
}

bool exact_equal(const Scalar& a, const Scalar& b) {
  if (!a.is_exact() || !b.is_exact()) {
    throw Error("backend-mismatch", "exact_equal needs exact operands");
  }
  return identical(a, b);
}

Scalar sqrt_real(const Scalar& x) {
  const auto z = x.to_complex();
  if (z.imag() != 0.0 || z.real() < 0.0) throw Error("domain-error", "sqrt of non-positive-real");
  return Scalar::floating(std::sqrt(z.real()));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.is_exact()) {
    const auto& q = s.exact_value();
    return os << '(' << q.re << (sgn(q.im) < 0 ? "" : "+") << q.im << "i)";
  }
  const auto z = s.float_value();
  return os << '(' << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
}

}  // namespace subdirac
