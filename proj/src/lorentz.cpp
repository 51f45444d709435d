#include "subdirac/lorentz.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace subdirac {

namespace {

constexpr Backend kF = Backend::floating;

Scalar real(double x) { return Scalar::floating(x); }

std::string fmt(double w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

// K^nu_mu = I^{nu lambda} g_{lambda mu}.
Mat4 vector_generator() {
  Mat4 k(kF);
  for (int nu = 0; nu < 4; ++nu) {
    for (int mu = 0; mu < 4; ++mu) {
      const int i = generator_component(nu, mu) * metric_sign(mu);
      if (i != 0) k.set(nu, mu, real(i));
    }
  }
  return k;
}

// The reduced operator gamma^0 p^0 - gamma^1 p^1 - m.
MomentumOperator<4, 4> special_frame_operator(const GammaRep& exact_rep) {
  std::array<Mat4, 4> coeff;
  coeff[0] = exact_rep.gamma[0];
  coeff[1] = -exact_rep.gamma[1];
  return {coeff, -Mat4::identity()};
}

const FourMomentum& single_momentum(const BispinorField& f) {
  if (f.terms().empty()) throw Error("special-frame-needs-single-momentum", "empty field");
  const FourMomentum& p = f.terms().front().momentum;
  for (const auto& t : f.terms()) {
    if (!identical(t.momentum, p)) throw Error("special-frame-needs-single-momentum");
  }
  return p;
}

}  // namespace

LorentzParams LorentzParams::boost(int axis, double rapidity) {
  LorentzParams p{TransformKind::boost, 0, axis, rapidity};
  p.validate();
  return p;
}

LorentzParams LorentzParams::rotation(int j, int k, double angle) {
  LorentzParams p{TransformKind::rotation, j, k, angle};
  p.validate();
  return p;
}

void LorentzParams::validate() const {
  const bool in_range = mu >= 0 && mu < 4 && nu >= 0 && nu < 4;
  const bool has_time = mu == 0 || nu == 0;
  if (!in_range || mu == nu || (kind == TransformKind::boost) != has_time ||
      !std::isfinite(omega)) {
    throw Error("invalid-lorentz-params");
  }
}

int generator_component(int mu, int nu) {
  if (mu == nu) return 0;
  if (mu == 0) return 1;
  if (nu == 0) return -1;
  return mu < nu ? -1 : 1;
}

FourMomentum VectorTransform::apply(const FourMomentum& p) const {
  const FourMomentum pf = p.promoted();
  std::array<Scalar, 4> out;
  for (int nu = 0; nu < 4; ++nu) {
    Scalar acc = real(0.0);
    for (int mu = 0; mu < 4; ++mu) acc += a(nu, mu) * pf[mu];
    out[nu] = acc;
  }
  return FourMomentum(out, pf.mass());
}

VectorTransform vector_transform(const LorentzParams& params) {
  params.validate();
  // Restrict the generator to the chosen plane.
  Mat4 k = vector_generator();
  Mat4 plane(kF);
  for (int r : {params.mu, params.nu}) {
    for (int c : {params.mu, params.nu}) plane.set(r, c, k(r, c));
  }
  const double w = params.omega;
  const bool boost = params.kind == TransformKind::boost;
  const double s = boost ? std::sinh(w) : std::sin(w);
  const double c = boost ? std::cosh(w) - 1.0 : 1.0 - std::cos(w);
  Mat4 a = Mat4::identity(kF) + real(s) * plane + real(c) * (plane * plane);

  const Mat4 g = Mat4::diagonal({real(1), real(-1), real(-1), real(-1)});
  return {a, (a.transpose() * g * a - g).max_abs()};
}

Mat4 spinor_generator(const LorentzParams& params, RepName rep, int generator_sign) {
  params.validate();
  const auto r = shared_rep(rep, kF);
  const double coeff = -0.5 * params.omega * generator_sign *
                       generator_component(params.mu, params.nu);
  return Scalar::floating(0.0, coeff) * sigma(*r, params.mu, params.nu);
}

Mat4 spinor_transform(const LorentzParams& params, RepName rep, int generator_sign) {
  const Mat4 x = spinor_generator(params, rep, generator_sign);
  const Mat4 s = mat_exp(x);

  // X^2 = c I with c = +w^2/4 (boost) or -w^2/4 (rotation).
  const Mat4 x2 = x * x;
  const double c = x2(0, 0).float_value().real();
  if ((x2 - real(c) * Mat4::identity(kF)).max_abs() > 1e-12 * (1.0 + std::abs(c))) {
    throw Error("exp-cross-check", "generator square is not scalar");
  }
  Mat4 closed = Mat4::identity(kF);
  if (c > 0.0) {
    const double r = std::sqrt(c);
    closed = real(std::cosh(r)) * Mat4::identity(kF) + real(std::sinh(r) / r) * x;
  } else if (c < 0.0) {
    const double r = std::sqrt(-c);
    closed = real(std::cos(r)) * Mat4::identity(kF) + real(std::sin(r) / r) * x;
  }
  if ((s - closed).max_abs() > 1e-12 * std::max(1.0, closed.max_abs())) {
    throw Error("exp-cross-check", "series and closed form disagree");
  }
  return s;
}

ResidualReport covariance_check(const LorentzParams& params, RepName rep, int generator_sign) {
  const auto r = shared_rep(rep, kF);
  const Mat4 s = spinor_transform(params, rep, generator_sign);
  const Mat4 s_inv = mat_exp(-spinor_generator(params, rep, generator_sign));
  const Mat4 a = vector_transform(params).a;
  const std::string tag = "(" + std::to_string(params.mu) + std::to_string(params.nu) + "," +
                          fmt(params.omega) + ")";

  ResidualReport out;
  for (int nu = 0; nu < 4; ++nu) {
    Mat4 lhs(kF);
    for (int mu = 0; mu < 4; ++mu) lhs += a(nu, mu) * (s * r->gamma[mu] * s_inv);
    out.add("Pconditions" + tag + "/nu=" + std::to_string(nu), Equation::pconditions,
            Residual::of(lhs - r->gamma[nu]));
  }
  const ProjectorSet& ps = shared_projectors(rep, kF);
  for (int k = 1; k <= 4; ++k) {
    const Mat4 pk = s * ps.P(k) * s_inv;
    out.add("P'" + std::to_string(k) + tag + " idempotent", Equation::p_prime,
            Residual::of(pk * pk - pk));
  }
  return out;
}

BispinorField transform_field(const BispinorField& f, const LorentzParams& params) {
  const BispinorField ff = f.backend() == kF ? f : f.promoted();
  const RepName rep = ff.gamma_rep().name;
  const Mat4 s = spinor_transform(params, rep);
  const VectorTransform a = vector_transform(params);
  std::vector<PlaneWaveTerm<4>> terms;
  for (const auto& t : ff.terms()) terms.push_back({s * t.amplitude, a.apply(t.momentum), t.freq_sign});
  return BispinorField(std::move(terms), kF, ff.rep());
}

ResidualReport transformed_split_residuals(const SplitResult& sr, const LorentzParams& params) {
  const BispinorField psi = sr.psi.backend() == kF ? sr.psi : sr.psi.promoted();
  const RepName rep = psi.gamma_rep().name;
  const Scalar m = sr.mass.promoted();
  const Mat4 s = spinor_transform(params, rep);
  const Mat4 s_inv = mat_exp(-spinor_generator(params, rep));
  const ProjectorSet& ps = shared_projectors(rep, kF);

  ResidualReport out;
  out.add("Dirac(S Psi)", Equation::dirac, Residual::of(dirac_residual(transform_field(psi, params), m)));
  for (int k = 1; k <= 2; ++k) {
    const BispinorField& part = k == 1 ? sr.psi1 : sr.psi2;
    const BispinorField moved = transform_field(part.backend() == kF ? part : part.promoted(), params);
    const Mat4 p_prime = s * ps.P(k) * s_inv;
    out.add("DP2b/" + std::to_string(k), k == 1 ? Equation::constituent1_p : Equation::constituent2_p,
            Residual::of(dirac_residual(p_prime * moved, m)));
  }
  return out;
}

ResidualReport pi_commutation_check(RepName rep, std::span<const double> omegas) {
  ResidualReport out;
  const auto exact_rep = shared_rep(rep, Backend::exact);
  const ProjectorSet& pe = shared_projectors(rep, Backend::exact);
  const ProjectorSet& pf = shared_projectors(rep, kF);
  for (int i = 1; i <= 4; ++i) {
    const std::string pi = "P" + std::to_string(i);
    out.add("[sigma03," + pi + "]", Equation::pi_commutation,
            Residual::of(commutator(sigma(*exact_rep, 0, 3), pe.P(i))));
    out.add("[sigma12," + pi + "]", Equation::pi_commutation,
            Residual::of(commutator(sigma(*exact_rep, 1, 2), pe.P(i))));
  }
  for (double w : omegas) {
    const Mat4 s03 = spinor_transform(LorentzParams::boost(3, w), rep);
    const Mat4 s12 = spinor_transform(LorentzParams::rotation(1, 2, w), rep);
    for (int i = 1; i <= 4; ++i) {
      const std::string pi = "P" + std::to_string(i);
      out.add_pinned("[S03(" + fmt(w) + ")," + pi + "]", Equation::pi_commutation,
                     Residual::of(commutator(s03, pf.P(i))), 1e-12);
      out.add_pinned("[S12(" + fmt(w) + ")," + pi + "]", Equation::pi_commutation,
                     Residual::of(commutator(s12, pf.P(i))), 1e-12);
    }
  }
  const Mat4 s01 = spinor_transform(LorentzParams::boost(1, 1.0), rep);
  out.add("[S01(1),P1]", Equation::pi_commutation, Residual::of(commutator(s01, pf.P(1))),
          Expect::nonzero);
  return out;
}

SpecialFrame special_frame(const FourMomentum& p) {
  if (p.mass().is_zero()) throw Error("special-frame-requires-mass");
  const auto c = [&](int mu) { return p[mu].to_complex().real(); };
  if (!(std::abs(c(3)) < c(0))) throw Error("off-shell", "|p^3| >= p^0");
  const double angle = std::atan2(c(2), c(1));
  const double rapidity = std::atanh(c(3) / c(0));
  return {LorentzParams::rotation(1, 2, angle), LorentzParams::boost(3, rapidity)};
}

ResidualReport special_frame_residuals(const SplitResult& sr) {
  const FourMomentum& p = single_momentum(sr.psi);
  const SpecialFrame frame = special_frame(p);
  const FourMomentum moved =
      vector_transform(frame.boost).apply(vector_transform(frame.rotation).apply(p));
  const double m = sr.mass.abs();
  const double drift = std::abs(std::sqrt(moved.minkowski_square().to_complex().real()) - m);

  ResidualReport out;
  out.add("p'^2", Equation::special_frame,
          Residual::floating(std::max(moved[2].abs(), moved[3].abs())));
  out.add_pinned("mass drift", Equation::special_frame, Residual::floating(drift), 1e-12);

  const auto to_frame = [&](const BispinorField& f) {
    const BispinorField ff = f.backend() == kF ? f : f.promoted();
    return transform_field(transform_field(ff, frame.rotation), frame.boost);
  };
  const BispinorField psi1 = to_frame(sr.psi1);
  const BispinorField psi2 = to_frame(sr.psi2);
  const ProjectorSet& ps = shared_projectors(psi1.gamma_rep().name, kF);
  const auto reduced = special_frame_operator(*shared_rep(ps.rep->name, Backend::exact));
  const Scalar mf = sr.mass.promoted();
  out.add("P1a", Equation::p1a, Residual::of(reduced.apply(ps.P(1) * psi1, mf)));
  out.add("P2a", Equation::p2a, Residual::of(reduced.apply(ps.P(2) * psi2, mf)));
  out.add("P2a(V P1 Psi'(1))", Equation::v_symmetry,
          Residual::of(reduced.apply(ps.P(2) * (ps.v * (ps.P(1) * psi1)), mf)));
  return out;
}

ResidualReport v_special_frame_check(RepName rep, Backend b) {
  const ProjectorSet& ps = shared_projectors(rep, b);
  const auto reduced = special_frame_operator(*shared_rep(rep, Backend::exact));
  const Mat4 v_inv = ps.v.adjoint();
  ResidualReport out;
  const auto conj = [&](const Mat4& x) { return ps.v * x.to(b) * v_inv - x.to(b); };
  out.add("V p0-coefficient V^-1", Equation::v_symmetry, Residual::of(conj(reduced.p_coefficient(0))));
  out.add("V p1-coefficient V^-1", Equation::v_symmetry, Residual::of(conj(reduced.p_coefficient(1))));
  out.add("V m-coefficient V^-1", Equation::v_symmetry, Residual::of(conj(reduced.mass_coefficient())));
  out.add("VP1V^-1-P2", Equation::v_symmetry, Residual::of(ps.v * ps.P(1) * v_inv - ps.P(2)));
  return out;
}

}  // namespace subdirac
