#include "subdirac/field.hpp"

#include <cmath>

namespace subdirac {

FourMomentum::FourMomentum(std::array<Scalar, 4> components, Scalar mass)
    : p_(std::move(components)), mass_(std::move(mass)) {
  for (const auto& c : p_) {
    if (c.backend() != mass_.backend()) throw Error("backend-mismatch", "four-momentum");
  }
  if (std::abs(mass_.to_complex().imag()) > 0.0 || mass_.real_sign() < 0) {
    throw Error("negative-mass");
  }
}

FourMomentum FourMomentum::exact(long p0, long p1, long p2, long p3, long mass) {
  return FourMomentum({Scalar::exact(p0), Scalar::exact(p1), Scalar::exact(p2), Scalar::exact(p3)},
                      Scalar::exact(mass));
}

FourMomentum FourMomentum::on_shell(double mass, double p1, double p2, double p3) {
  const double p0 = std::sqrt(mass * mass + p1 * p1 + p2 * p2 + p3 * p3);
  return FourMomentum({Scalar::floating(p0), Scalar::floating(p1), Scalar::floating(p2),
                       Scalar::floating(p3)},
                      Scalar::floating(mass));
}

Scalar FourMomentum::minkowski_square() const {
  return p_[0] * p_[0] - p_[1] * p_[1] - p_[2] * p_[2] - p_[3] * p_[3];
}

bool FourMomentum::is_on_shell(double rel_tol) const {
  if (p_[0].real_sign() <= 0) return false;
  const Scalar defect = minkowski_square() - mass_ * mass_;
  if (backend() == Backend::exact) return defect.is_zero();
  const double scale = std::max(1.0, p_[0].abs() * p_[0].abs());
  return defect.abs() <= rel_tol * scale;
}

FourMomentum FourMomentum::promoted() const {
  return FourMomentum({p_[0].promoted(), p_[1].promoted(), p_[2].promoted(), p_[3].promoted()},
                      mass_.promoted());
}

bool identical(const FourMomentum& a, const FourMomentum& b) {
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (!identical(a.p_[mu], b.p_[mu])) return false;
  }
  return identical(a.mass_, b.mass_);
}

BispinorField stack(const SpinorField& top, const SpinorField& bottom,
                    std::shared_ptr<const GammaRep> rep) {
  const Backend b = top.backend();
  std::vector<PlaneWaveTerm<4>> terms;
  auto embed = [&](const SpinorField& f, std::size_t offset) {
    for (const auto& t : f.terms()) {
      Vector<4> v(b);
      v.set(offset, 0, t.amplitude[0]);
      v.set(offset + 1, 0, t.amplitude[1]);
      terms.push_back({v, t.momentum, t.freq_sign});
    }
  };
  embed(top, 0);
  embed(bottom, 2);
  return BispinorField(std::move(terms), b, std::move(rep), MomentumCheck::unchecked);
}

BispinorField charge_conjugate(const BispinorField& f) {
  const GammaRep& rep = f.gamma_rep();
  return charge_conjugation_matrix(rep) * conjugate(f);
}

MomentumForm MomentumForm::operator-() const {
  MomentumForm f;
  for (int mu = 0; mu < 4; ++mu) f.p[mu] = -p[mu];
  f.mass = -mass;
  return f;
}

MomentumForm operator+(const MomentumForm& a, const MomentumForm& b) {
  MomentumForm f;
  for (int mu = 0; mu < 4; ++mu) f.p[mu] = a.p[mu] + b.p[mu];
  f.mass = a.mass + b.mass;
  return f;
}

MomentumForm operator-(const MomentumForm& a, const MomentumForm& b) { return a + (-b); }

MomentumForm operator*(const Scalar& s, const MomentumForm& f) {
  MomentumForm out;
  for (int mu = 0; mu < 4; ++mu) out.p[mu] = s * f.p[mu];
  out.mass = s * f.mass;
  return out;
}

namespace form {

MomentumForm p(int mu) {
  MomentumForm f;
  f.p.at(mu) = Scalar::exact(1);
  return f;
}

MomentumForm m() {
  MomentumForm f;
  f.mass = Scalar::exact(1);
  return f;
}

MomentumForm zero() { return {}; }

}  // namespace form

MomentumOperator<4, 4> dirac_operator(const GammaRep& rep, bool with_mass) {
  const Backend b = rep.backend();
  std::array<Mat4, 4> coeff;
  for (int mu = 0; mu < 4; ++mu) coeff[mu] = rep.lowered(mu);
  return {coeff, with_mass ? -Mat4::identity(b) : Mat4(b)};
}

BispinorField dirac_residual(const BispinorField& f, const Scalar& m) {
  return dirac_operator(f.gamma_rep()).apply(f, m);
}

BispinorField dirac_residual(const BispinorField& f) {
  const auto op = dirac_operator(f.gamma_rep());
  return f.map_amplitudes<4>(
      [&](const PlaneWaveTerm<4>& t) {
        return op.evaluate(t.momentum, t.freq_sign, t.momentum.mass()) * t.amplitude;
      },
      f.rep());
}

namespace {

// sigma.p for the spatial part of p.
Mat2 sigma_dot(const FourMomentum& p) {
  const Backend b = p.backend();
  const Scalar i = Scalar::imag_unit(b);
  return Mat2{p[3], p[1] - i * p[2], p[1] + i * p[2], -p[3]};
}

Vector<4> to_rep(const Vector<4>& spinor_amplitude, RepName rep) {
  if (rep == RepName::spinor) return spinor_amplitude;
  const Backend b = spinor_amplitude.backend();
  return intertwiner(RepName::spinor, rep).transport_matrix(b) * spinor_amplitude;
}

Vector<4> join(const Vector<2>& top, const Vector<2>& bottom) {
  return Vector<4>{top[0], top[1], bottom[0], bottom[1]};
}

Vector<4> normalise(const Vector<4>& v, const FourMomentum& p) {
  if (v.backend() == Backend::exact) return v;
  const double norm_sq = (v.adjoint() * v)(0, 0).abs();
  return v * Scalar::floating(std::sqrt(2.0 * p[0].abs() / norm_sq));
}

}  // namespace

PlaneWaveTerm<4> u_spinor(const FourMomentum& p, RepName rep, int spin_label) {
  if (spin_label != 1 && spin_label != 2) throw Error("bad-spin-label");
  if (p.mass().is_zero()) throw Error("massless-needs-weyl");
  if (!p.is_on_shell()) throw Error("off-shell");
  const Backend b = p.backend();
  const Mat2 one = Mat2::identity(b);
  const Mat2 sp = sigma_dot(p);
  const Scalar shift = p.mass() + p[0];
  const Vector<2> chi = spin_label == 1 ? Vector<2>{Scalar::one(b), Scalar::zero(b)}
                                        : Vector<2>{Scalar::zero(b), Scalar::one(b)};
  const Vector<2> xi = (shift * one + sp) * chi;
  const Vector<2> eta = (shift * one - sp) * chi;
  return {to_rep(normalise(join(xi, eta), p), rep), p, +1};
}

PlaneWaveTerm<4> weyl_spinor(const FourMomentum& p, RepName rep, Chirality chirality) {
  if (!p.mass().is_zero()) throw Error("weyl-requires-massless");
  if (!p.is_on_shell()) throw Error("off-shell");
  const Backend b = p.backend();
  const Mat2 sp = sigma_dot(p);
  const Mat2 p0 = p[0] * Mat2::identity(b);
  // Columns of the rank-one matrix (p^0 -+ sigma.p) solve the opposite-sign
  // equation; pick the one that cannot vanish for the given sign of p^3.
  const Vector<2> zero(b);
  Vector<4> amp(b);
  if (chirality == Chirality::left) {
    const Mat2 m = p0 - sp;
    const std::size_t col = p[3].real_sign() > 0 ? 1 : 0;
    amp = join(zero, Vector<2>{m(0, col), m(1, col)});
  } else {
    const Mat2 m = p0 + sp;
    const std::size_t col = p[3].real_sign() >= 0 ? 0 : 1;
    amp = join(Vector<2>{m(0, col), m(1, col)}, zero);
  }
  return {to_rep(normalise(amp, p), rep), p, +1};
}

}  // namespace subdirac
