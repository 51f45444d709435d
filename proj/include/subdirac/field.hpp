#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "subdirac/gamma.hpp"
#include "subdirac/matrix.hpp"

namespace subdirac {

/// Contravariant four-momentum (p^0, p^1, p^2, p^3) with its mass, in units
/// c = hbar = 1.
class FourMomentum {
 public:
  FourMomentum(std::array<Scalar, 4> components, Scalar mass);

  /// Exact momentum with integer components.
  static FourMomentum exact(long p0, long p1, long p2, long p3, long mass);
  /// Floating on-shell momentum: p^0 = sqrt(m^2 + |p|^2).
  static FourMomentum on_shell(double mass, double p1, double p2, double p3);

  const Scalar& operator[](int mu) const { return p_[static_cast<std::size_t>(mu)]; }
  const Scalar& mass() const { return mass_; }
  Backend backend() const { return mass_.backend(); }

  /// p.p = (p^0)^2 - |p|^2.
  Scalar minkowski_square() const;
  /// p.p = m^2 and p^0 > 0; exact for the exact backend, otherwise to
  /// `rel_tol` relative to (p^0)^2.
  bool is_on_shell(double rel_tol = 1e-12) const;
  FourMomentum promoted() const;

  friend bool identical(const FourMomentum& a, const FourMomentum& b);

 private:
  std::array<Scalar, 4> p_;
  Scalar mass_;
};

/// amplitude * exp(-i * freq_sign * p.x)
template <std::size_t N>
struct PlaneWaveTerm {
  Vector<N> amplitude;
  FourMomentum momentum;
  int freq_sign = +1;
};

enum class MomentumCheck { on_shell, unchecked };

/// A finite sum of plane waves with N-component amplitudes.
///
/// Values are kept in canonical form: terms sharing (momentum, freq_sign) are
/// merged and terms whose amplitude is literally zero are dropped, so an exact
/// field vanishes iff it has no terms. Four-component fields carry the gamma
/// representation their amplitudes are written in.
template <std::size_t N>
class PlaneWaveField {
 public:
  using Term = PlaneWaveTerm<N>;

  explicit PlaneWaveField(Backend b, std::shared_ptr<const GammaRep> rep = nullptr)
      : rep_(std::move(rep)), backend_(b) {}

  PlaneWaveField(std::vector<Term> terms, Backend b, std::shared_ptr<const GammaRep> rep,
                 MomentumCheck check = MomentumCheck::on_shell)
      : terms_(std::move(terms)), rep_(std::move(rep)), backend_(b) {
    for (const auto& t : terms_) {
      if (t.amplitude.backend() != b || t.momentum.backend() != b) {
        throw Error("backend-mismatch", "term backend differs from field backend");
      }
      if (t.freq_sign != 1 && t.freq_sign != -1) throw Error("bad-frequency-sign");
      if (check == MomentumCheck::on_shell && !t.momentum.is_on_shell()) throw Error("off-shell");
    }
    canonicalize();
  }

  static PlaneWaveField single(Term t, std::shared_ptr<const GammaRep> rep,
                               MomentumCheck check = MomentumCheck::on_shell) {
    const Backend b = t.amplitude.backend();
    return PlaneWaveField({std::move(t)}, b, std::move(rep), check);
  }

  const std::vector<Term>& terms() const { return terms_; }
  Backend backend() const { return backend_; }
  const std::shared_ptr<const GammaRep>& rep() const { return rep_; }

  const GammaRep& gamma_rep() const {
    if (!rep_) throw Error("missing-rep", "field carries no gamma representation");
    return *rep_;
  }

  bool is_zero() const {
    for (const auto& t : terms_) {
      if (!t.amplitude.is_zero()) return false;
    }
    return true;
  }

  /// Largest amplitude entry modulus over all terms.
  double max_abs() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, t.amplitude.max_abs());
    return m;
  }

  PlaneWaveField with_rep(std::shared_ptr<const GammaRep> rep) const {
    PlaneWaveField f(*this);
    f.rep_ = std::move(rep);
    return f;
  }

  PlaneWaveField promoted() const {
    PlaneWaveField f(Backend::floating,
                     rep_ ? shared_rep(rep_->name, Backend::floating) : nullptr);
    for (const auto& t : terms_) {
      f.terms_.push_back({t.amplitude.promoted(), t.momentum.promoted(), t.freq_sign});
    }
    f.canonicalize();
    return f;
  }

  /// Applies `fn(term) -> Vector<M>` to every amplitude, keeping momenta.
  template <std::size_t M, typename Fn>
  PlaneWaveField<M> map_amplitudes(Fn&& fn, std::shared_ptr<const GammaRep> rep) const {
    std::vector<PlaneWaveTerm<M>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({fn(t), t.momentum, t.freq_sign});
    return PlaneWaveField<M>(std::move(out), backend_, std::move(rep), MomentumCheck::unchecked);
  }

  PlaneWaveField operator-() const {
    return map_amplitudes<N>([](const Term& t) { return -t.amplitude; }, rep_);
  }

  PlaneWaveField& operator+=(const PlaneWaveField& o) {
    if (o.backend_ != backend_) throw Error("backend-mismatch", "adding fields");
    if (!rep_) rep_ = o.rep_;
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
  }
  PlaneWaveField& operator-=(const PlaneWaveField& o) { return *this += -o; }

  friend PlaneWaveField operator+(PlaneWaveField a, const PlaneWaveField& b) { return a += b; }
  friend PlaneWaveField operator-(PlaneWaveField a, const PlaneWaveField& b) { return a -= b; }
  friend PlaneWaveField operator*(const Scalar& s, const PlaneWaveField& f) {
    return f.template map_amplitudes<N>([&](const Term& t) { return s * t.amplitude; }, f.rep_);
  }

  /// Returns an equal field with its terms rebuilt in canonical order.
  PlaneWaveField canonical() const {
    PlaneWaveField f(*this);
    f.canonicalize();
    return f;
  }

 private:
  /// Merges equal (momentum, freq_sign) keys and drops zero amplitudes.
  void canonicalize() {
    std::vector<Term> merged;
    for (auto& t : terms_) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const Term& m) {
        return m.freq_sign == t.freq_sign && identical(m.momentum, t.momentum);
      });
      if (it == merged.end()) {
        merged.push_back(std::move(t));
      } else {
        it->amplitude += t.amplitude;
      }
    }
    std::erase_if(merged, [](const Term& t) { return t.amplitude.is_zero(); });
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
  std::shared_ptr<const GammaRep> rep_;
  Backend backend_;
};

using BispinorField = PlaneWaveField<4>;
using SpinorField = PlaneWaveField<2>;

/// Left multiplication of every amplitude by a constant matrix.
template <std::size_t M, std::size_t N>
PlaneWaveField<M> operator*(const Matrix<M, N>& a, const PlaneWaveField<N>& f) {
  const Matrix<M, N> am = a.to(f.backend());
  return f.template map_amplitudes<M>(
      [&](const PlaneWaveTerm<N>& t) { return am * t.amplitude; },
      M == N ? f.rep() : nullptr);
}

/// p^mu acting as i d/dx_mu: each amplitude is multiplied by
/// freq_sign * p^mu of its own term.
template <std::size_t N>
PlaneWaveField<N> momentum_op(const PlaneWaveField<N>& f, int mu) {
  if (mu < 0 || mu > 3) throw Error("index-out-of-range", "momentum index");
  return f.template map_amplitudes<N>(
      [&](const PlaneWaveTerm<N>& t) {
        return Scalar::integer(t.freq_sign, f.backend()) * t.momentum[mu] * t.amplitude;
      },
      f.rep());
}

/// Complex conjugation: conjugated amplitudes, flipped frequency signs.
template <std::size_t N>
PlaneWaveField<N> conjugate(const PlaneWaveField<N>& f) {
  std::vector<PlaneWaveTerm<N>> out;
  for (const auto& t : f.terms()) out.push_back({t.amplitude.conj(), t.momentum, -t.freq_sign});
  return PlaneWaveField<N>(std::move(out), f.backend(), f.rep(), MomentumCheck::unchecked);
}

/// Components [offset, offset + M) of every amplitude.
template <std::size_t M, std::size_t N>
PlaneWaveField<M> components(const PlaneWaveField<N>& f, std::size_t offset) {
  static_assert(M <= N);
  if (offset + M > N) throw Error("index-out-of-range", "component slice");
  return f.template map_amplitudes<M>(
      [&](const PlaneWaveTerm<N>& t) {
        Vector<M> v(f.backend());
        for (std::size_t k = 0; k < M; ++k) v.set(k, 0, t.amplitude[offset + k]);
        return v;
      },
      nullptr);
}

/// Upper (xi) and lower (eta) two-component halves of a bispinor field.
inline SpinorField upper(const BispinorField& f) { return components<2>(f, 0); }
inline SpinorField lower(const BispinorField& f) { return components<2>(f, 2); }

/// Bispinor field (top, bottom) in representation `rep`.
BispinorField stack(const SpinorField& top, const SpinorField& bottom,
                    std::shared_ptr<const GammaRep> rep);

/// C Psi = i gamma^2 Psi* (see charge_conjugation_matrix for other representations).
BispinorField charge_conjugate(const BispinorField& f);

/// Integer-coefficient linear form a_mu p^mu + b m.
struct MomentumForm {
  std::array<Scalar, 4> p{};
  Scalar mass{};

  MomentumForm operator-() const;
  friend MomentumForm operator+(const MomentumForm& a, const MomentumForm& b);
  friend MomentumForm operator-(const MomentumForm& a, const MomentumForm& b);
  friend MomentumForm operator*(const Scalar& s, const MomentumForm& f);
};

namespace form {
/// p^mu
MomentumForm p(int mu);
/// the mass m
MomentumForm m();
/// 0
MomentumForm zero();
}  // namespace form

/// Matrix of linear forms in (p^0..p^3, m): sum_mu A_mu p^mu + B m.
///
/// Applied to a field, each term is acted on with its own eigenvalues
/// freq_sign * p^mu, so this realises a constant-coefficient first-order
/// differential operator exactly. Exact coefficients are promoted to the
/// field's backend on application; floating coefficients only apply to
/// floating fields.
template <std::size_t R, std::size_t C>
class MomentumOperator {
 public:
  MomentumOperator() = default;
  MomentumOperator(std::array<Matrix<R, C>, 4> p_coeff, Matrix<R, C> mass_coeff)
      : p_coeff_(std::move(p_coeff)), mass_coeff_(std::move(mass_coeff)) {}

  /// Row-by-row transcription, e.g. {{-m, 0, p0 + p3, p1 - i p2}, ...}.
  static MomentumOperator from_rows(
      std::initializer_list<std::initializer_list<MomentumForm>> rows) {
    if (rows.size() != R) throw Error("shape-mismatch", "operator rows");
    MomentumOperator op;
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != C) throw Error("shape-mismatch", "operator columns");
      std::size_t j = 0;
      for (const auto& entry : row) {
        for (int mu = 0; mu < 4; ++mu) op.p_coeff_[mu].set(i, j, entry.p[mu]);
        op.mass_coeff_.set(i, j, entry.mass);
        ++j;
      }
      ++i;
    }
    return op;
  }

  const Matrix<R, C>& p_coefficient(int mu) const { return p_coeff_.at(mu); }
  const Matrix<R, C>& mass_coefficient() const { return mass_coeff_; }
  Backend backend() const { return mass_coeff_.backend(); }

  /// Numeric matrix for eigenvalues freq_sign * p^mu and mass m.
  Matrix<R, C> evaluate(const FourMomentum& p, int freq_sign, const Scalar& m) const {
    const Backend b = p.backend();
    const Scalar sign = Scalar::integer(freq_sign, b);
    Matrix<R, C> out = m.to(b) * mass_coeff_.to(b);
    for (int mu = 0; mu < 4; ++mu) out += (sign * p[mu]) * p_coeff_[mu].to(b);
    return out;
  }

  PlaneWaveField<R> apply(const PlaneWaveField<C>& f, const Scalar& m) const {
    return f.template map_amplitudes<R>(
        [&](const PlaneWaveTerm<C>& t) {
          return evaluate(t.momentum, t.freq_sign, m) * t.amplitude;
        },
        R == C ? f.rep() : nullptr);
  }

  friend MomentumOperator operator+(const MomentumOperator& a, const MomentumOperator& b) {
    MomentumOperator out = a;
    for (int mu = 0; mu < 4; ++mu) out.p_coeff_[mu] += b.p_coeff_[mu];
    out.mass_coeff_ += b.mass_coeff_;
    return out;
  }

  template <std::size_t K>
  friend MomentumOperator<R, K> operator*(const MomentumOperator& a, const Matrix<C, K>& m) {
    std::array<Matrix<R, K>, 4> pc;
    for (int mu = 0; mu < 4; ++mu) pc[mu] = a.p_coeff_[mu] * m;
    return MomentumOperator<R, K>(pc, a.mass_coeff_ * m);
  }

  template <std::size_t K>
  friend MomentumOperator<K, C> operator*(const Matrix<K, R>& m, const MomentumOperator& a) {
    std::array<Matrix<K, C>, 4> pc;
    for (int mu = 0; mu < 4; ++mu) pc[mu] = m * a.p_coeff_[mu];
    return MomentumOperator<K, C>(pc, m * a.mass_coeff_);
  }

  /// Literal equality of all coefficient matrices (exact backend).
  friend bool exact_eq(const MomentumOperator& a, const MomentumOperator& b) {
    for (int mu = 0; mu < 4; ++mu) {
      if (!exact_eq(a.p_coeff_[mu], b.p_coeff_[mu])) return false;
    }
    return exact_eq(a.mass_coeff_, b.mass_coeff_);
  }

 private:
  std::array<Matrix<R, C>, 4> p_coeff_{};
  Matrix<R, C> mass_coeff_{};
};

/// gamma^mu p_mu - m (or without the mass term), coefficients from `rep`.
MomentumOperator<4, 4> dirac_operator(const GammaRep& rep, bool with_mass = true);

/// (gamma^mu p_mu - m) f with the field's own representation.
BispinorField dirac_residual(const BispinorField& f, const Scalar& m);
/// Same, with every term using the mass carried by its own momentum.
BispinorField dirac_residual(const BispinorField& f);

/// Positive-energy solution of the Dirac equation with spin label 1 or 2.
///
/// Built in the spinor representation as
///   xi  = (m + p^0 + sigma.p) chi / sqrt(2 (m + p^0))
///   eta = (m + p^0 - sigma.p) chi / sqrt(2 (m + p^0))
/// with chi = (1,0) or (0,1), then carried to `rep` by its intertwiner. The
/// floating backend is normalised to u^dagger u = 2 p^0; the exact backend
/// drops the irrational factor (and, for the standard representation, keeps
/// the unnormalised intertwiner), so its amplitudes are a positive multiple of
/// the normalised ones.
PlaneWaveTerm<4> u_spinor(const FourMomentum& p, RepName rep, int spin_label);

enum class Chirality { left, right };

/// Massless two-component solution embedded in a bispinor.
///
/// left:  eta solves (p^0 + sigma.p) eta = 0, xi = 0 (helicity -1/2, the
///        gamma^5 = +1 half, image of Q+ in this convention)
/// right: xi solves (p^0 - sigma.p) xi = 0, eta = 0 (image of Q-)
/// Floating amplitudes are normalised to 2 p^0.
PlaneWaveTerm<4> weyl_spinor(const FourMomentum& p, RepName rep, Chirality chirality);

}  // namespace subdirac
