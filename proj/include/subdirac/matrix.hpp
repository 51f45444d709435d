#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>

#include "subdirac/error.hpp"
#include "subdirac/scalar.hpp"

namespace subdirac {

/// Dense R x C complex matrix whose entries all share one backend.
///
/// Entries are stored row-major. Mixing backends inside a matrix, or between
/// the operands of a binary operation, throws Error("backend-mismatch").
template <std::size_t R, std::size_t C>
class Matrix {
 public:
  static constexpr std::size_t rows = R;
  static constexpr std::size_t cols = C;

  Matrix() : Matrix(Backend::exact) {}
  explicit Matrix(Backend b) : entries_(filled(Scalar::zero(b))), backend_(b) {}

  /// Row-major entries; all must share one backend.
  Matrix(std::initializer_list<Scalar> entries) : entries_(filled(Scalar::zero(Backend::floating))) {
    if (entries.size() != R * C) throw Error("shape-mismatch", "wrong number of entries");
    std::copy(entries.begin(), entries.end(), entries_.begin());
    backend_ = entries_.front().backend();
    for (const auto& e : entries_) {
      if (e.backend() != backend_) throw Error("backend-mismatch", "mixed-backend matrix entries");
    }
  }

  static Matrix identity(Backend b = Backend::exact)
    requires(R == C)
  {
    Matrix m(b);
    for (std::size_t i = 0; i < R; ++i) m.entries_[i * C + i] = Scalar::one(b);
    return m;
  }

  static Matrix diagonal(std::initializer_list<Scalar> diag)
    requires(R == C)
  {
    if (diag.size() != R) throw Error("shape-mismatch", "wrong diagonal length");
    Matrix m(diag.begin()->backend());
    std::size_t i = 0;
    for (const auto& d : diag) m.set(i, i, d), ++i;
    return m;
  }

  /// Single 1 at (i, j).
  static Matrix unit(std::size_t i, std::size_t j, Backend b = Backend::exact) {
    Matrix m(b);
    m.set(i, j, Scalar::one(b));
    return m;
  }

  Backend backend() const noexcept { return backend_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * C + j]; }
  const Scalar& operator[](std::size_t i) const
    requires(C == 1)
  {
    return entries_[i];
  }

  void set(std::size_t i, std::size_t j, Scalar value) {
    if (value.backend() != backend_) throw Error("backend-mismatch", "entry backend differs");
    entries_[i * C + j] = std::move(value);
  }

  const std::array<Scalar, R * C>& entries() const noexcept { return entries_; }

  /// exact -> floating promotion.
  Matrix promoted() const { return to(Backend::floating); }

  Matrix to(Backend b) const {
    if (b == backend_) return *this;
    Matrix m(b);
    for (std::size_t k = 0; k < R * C; ++k) m.entries_[k] = entries_[k].to(b);
    return m;
  }

  Matrix<C, R> transpose() const {
    Matrix<C, R> t(backend_);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t.set(j, i, (*this)(i, j));
    return t;
  }

  Matrix conj() const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = e.conj();
    return m;
  }

  Matrix<C, R> adjoint() const { return conj().transpose(); }

  Scalar trace() const
    requires(R == C)
  {
    Scalar t = Scalar::zero(backend_);
    for (std::size_t i = 0; i < R; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.abs());
    return m;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& e) { return e.is_zero(); });
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = -e;
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_backend(o.backend_);
    for (std::size_t k = 0; k < R * C; ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_backend(o.backend_);
    for (std::size_t k = 0; k < R * C; ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  Matrix& operator*=(const Scalar& s) {
    check_backend(s.backend());
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

  template <std::size_t K>
  friend Matrix<R, K> operator*(const Matrix& a, const Matrix<C, K>& b) {
    a.check_backend(b.backend());
    Matrix<R, K> out(a.backend_);
    for (std::size_t i = 0; i < R; ++i) {
      for (std::size_t k = 0; k < K; ++k) {
        Scalar acc = Scalar::zero(a.backend_);
        for (std::size_t j = 0; j < C; ++j) {
          if (a(i, j).is_zero() || b(j, k).is_zero()) continue;
          acc += a(i, j) * b(j, k);
        }
        out.set(i, k, std::move(acc));
      }
    }
    return out;
  }

 private:
  // Builds the array directly so no exact zero is created and discarded.
  static std::array<Scalar, R * C> filled(const Scalar& value) {
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
      return std::array<Scalar, R * C>{((void)I, value)...};
    }(std::make_index_sequence<R * C>{});
  }

  void check_backend(Backend other) const {
    if (other != backend_) throw Error("backend-mismatch", "matrix operands in different backends");
  }

  std::array<Scalar, R * C> entries_;
  Backend backend_;
};

using Mat4 = Matrix<4, 4>;
using Mat2 = Matrix<2, 2>;
template <std::size_t N>
using Vector = Matrix<N, 1>;

template <std::size_t N>
Matrix<N, N> mat_mul(const Matrix<N, N>& a, const Matrix<N, N>& b) {
  return a * b;
}

template <std::size_t N>
Matrix<N, N> commutator(const Matrix<N, N>& a, const Matrix<N, N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
Matrix<N, N> anticommutator(const Matrix<N, N>& a, const Matrix<N, N>& b) {
  return a * b + b * a;
}

/// Entrywise max-norm comparison. Both operands must be floating.
template <std::size_t R, std::size_t C>
bool approx_eq(const Matrix<R, C>& a, const Matrix<R, C>& b, double tol) {
  if (a.backend() != Backend::floating || b.backend() != Backend::floating) {
    throw Error("backend-mismatch", "approx_eq needs floating matrices");
  }
  return (a - b).max_abs() <= tol;
}

/// Literal rational equality. Both operands must be exact.
template <std::size_t R, std::size_t C>
bool exact_eq(const Matrix<R, C>& a, const Matrix<R, C>& b) {
  if (a.backend() != Backend::exact || b.backend() != Backend::exact) {
    throw Error("backend-mismatch", "exact_eq needs exact matrices");
  }
  for (std::size_t k = 0; k < R * C; ++k) {
    if (!exact_equal(a.entries()[k], b.entries()[k])) return false;
  }
  return true;
}

/// Matrix exponential by scaling and squaring around a truncated Taylor series.
///
/// The argument is scaled by 2^-s until its max-row-sum norm is at most 1/2,
/// the series is summed until a term's max-norm drops below `term_tolerance`,
/// and the result is squared s times. Exact input throws "exp-requires-float";
/// a series that fails to converge or produces non-finite entries throws
/// "exp-diverged".
template <std::size_t N>
Matrix<N, N> mat_exp(const Matrix<N, N>& a, double term_tolerance = 1e-18) {
  if (a.backend() != Backend::floating) throw Error("exp-requires-float");
  constexpr int kMaxTerms = 64;

  double norm = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < N; ++j) row += a(i, j).abs();
    norm = std::max(norm, row);
  }
  if (!std::isfinite(norm)) throw Error("exp-diverged", "non-finite generator");

  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix<N, N> scaled = a * Scalar::floating(std::ldexp(1.0, -squarings));

  auto result = Matrix<N, N>::identity(Backend::floating);
  auto term = result;
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * scaled * Scalar::floating(1.0 / k);
    result += term;
    if (term.max_abs() < term_tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw Error("exp-diverged", "series did not converge");

  for (int s = 0; s < squarings; ++s) result = result * result;
  for (const auto& e : result.entries()) {
    const auto z = e.float_value();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error("exp-diverged");
  }
  return result;
}

template <std::size_t R, std::size_t C>
std::ostream& operator<<(std::ostream& os, const Matrix<R, C>& m) {
  for (std::size_t i = 0; i < R; ++i) {
    os << '[';
    for (std::size_t j = 0; j < C; ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

}  // namespace subdirac
