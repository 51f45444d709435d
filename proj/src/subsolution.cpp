#include "subdirac/subsolution.hpp"

#include <string>

namespace subdirac {

namespace systems {

namespace {

const MomentumForm p0 = form::p(0);
const MomentumForm p1 = form::p(1);
const MomentumForm p2 = form::p(2);
const MomentumForm p3 = form::p(3);
const MomentumForm m = form::m();
const MomentumForm O = form::zero();
const Scalar i = Scalar::exact(0, 1);

}  // namespace

MomentumOperator<4, 4> dirac_components() {
  return MomentumOperator<4, 4>::from_rows({
      {-m, O, p0 + p3, p1 - i * p2},
      {O, -m, p1 + i * p2, p0 - p3},
      {p0 - p3, -p1 + i * p2, -m, O},
      {-p1 - i * p2, p0 + p3, O, -m},
  });
}

MomentumOperator<2, 4> xi1_definition() {
  return MomentumOperator<2, 4>::from_rows({
      {O, O, p0 + p3, O},
      {O, O, p1 + i * p2, O},
  });
}

MomentumOperator<2, 4> xi2_definition() {
  return MomentumOperator<2, 4>::from_rows({
      {O, O, O, p1 - i * p2},
      {O, O, O, p0 - p3},
  });
}

MomentumOperator<1, 2> id1() {
  return MomentumOperator<1, 2>::from_rows({{p1 + i * p2, -(p0 + p3)}});
}

MomentumOperator<1, 2> id2() {
  return MomentumOperator<1, 2>::from_rows({{p0 - p3, -(p1 - i * p2)}});
}

MomentumOperator<3, 4> constituent1() {
  return MomentumOperator<3, 4>::from_rows({
      {-m, O, p0 + p3, O},
      {O, -m, p1 + i * p2, O},
      {p0 - p3, -p1 + i * p2, -m, O},
  });
}

MomentumOperator<3, 4> constituent2() {
  return MomentumOperator<3, 4>::from_rows({
      {-m, O, O, p1 - i * p2},
      {O, -m, O, p0 - p3},
      {-p1 - i * p2, p0 + p3, O, -m},
  });
}

MomentumOperator<4, 4> constituent1_4() {
  return MomentumOperator<4, 4>::from_rows({
      {-m, O, p0 + p3, O},
      {O, -m, p1 + i * p2, O},
      {p0 - p3, -p1 + i * p2, -m, O},
      {-(p1 + i * p2), p0 + p3, O, O},
  });
}

MomentumOperator<4, 4> constituent2_4() {
  return MomentumOperator<4, 4>::from_rows({
      {-m, O, O, p1 - i * p2},
      {O, -m, O, p0 - p3},
      {p0 - p3, -p1 + i * p2, O, O},
      {-p1 - i * p2, p0 + p3, O, -m},
  });
}

}  // namespace systems

namespace {

// (p0 + sigma.p) and (p0 - sigma.p) on two-component fields.
MomentumOperator<2, 2> weyl_plus() {
  const Scalar i = Scalar::exact(0, 1);
  const auto p = form::p;
  return MomentumOperator<2, 2>::from_rows({
      {p(0) + p(3), p(1) - i * p(2)},
      {p(1) + i * p(2), p(0) - p(3)},
  });
}

MomentumOperator<2, 2> weyl_minus() {
  const Scalar i = Scalar::exact(0, 1);
  const auto p = form::p;
  return MomentumOperator<2, 2>::from_rows({
      {p(0) - p(3), -p(1) + i * p(2)},
      {-p(1) - i * p(2), p(0) + p(3)},
  });
}

Mat2 pauli2(Backend b) {
  const Scalar i = Scalar::imag_unit(b);
  return Mat2{Scalar::zero(b), -i, i, Scalar::zero(b)};
}

bool vanishes(const BispinorField& r, double tol, double scale) {
  if (r.backend() == Backend::exact) return r.is_zero();
  return r.max_abs() <= tol * (1.0 + scale);
}

std::string tagged(const std::string& base, RepName rep) {
  return base + "[" + to_string(rep) + "]";
}

}  // namespace

BispinorField transport(const BispinorField& f, RepName to) {
  const RepName from = f.gamma_rep().name;
  const Backend b = f.backend();
  if (from == to) return f;
  return (intertwiner(from, to).transport_matrix(b) * f).with_rep(shared_rep(to, b));
}

SplitResult split(const BispinorField& psi, const Scalar& m, const SplitOptions& options) {
  if (m.is_zero()) throw Error("split-requires-mass");
  if (psi.gamma_rep().name != RepName::spinor) throw Error("split-requires-spinor-rep");
  const Backend b = psi.backend();
  const Scalar mass = m.to(b);
  if (options.check_solution &&
      !vanishes(dirac_residual(psi, mass), options.tol, psi.max_abs())) {
    throw Error("not-a-solution");
  }

  const Scalar inv_m = Scalar::one(b) / mass;
  SpinorField xi1 = inv_m * systems::xi1_definition().apply(psi, mass);
  SpinorField xi2 = inv_m * systems::xi2_definition().apply(psi, mass);
  const SpinorField eta = lower(psi);
  BispinorField psi1 = stack(xi1, eta, psi.rep());
  BispinorField psi2 = stack(xi2, eta, psi.rep());
  return {psi, std::move(psi1), std::move(psi2), std::move(xi1), std::move(xi2), mass};
}

ResidualReport recombination_residuals(const SplitResult& sr) {
  const Backend b = sr.psi.backend();
  const ProjectorSet& ps = shared_projectors(RepName::spinor, b);
  const SpinorField xi_defect = sr.xi1 + sr.xi2 - upper(sr.psi);
  ResidualReport r;
  r.add("def3", Equation::def3, Residual::of(components<1>(xi_defect, 0)));
  r.add("def4", Equation::def4, Residual::of(components<1>(xi_defect, 1)));
  r.add("P1Psi(1)+P2Psi(2)-Psi", Equation::psi,
        Residual::of(ps.P(1) * sr.psi1 + ps.P(2) * sr.psi2 - sr.psi));
  return r;
}

ResidualReport identity_residuals(const SplitResult& sr) {
  const Backend b = sr.psi.backend();
  ResidualReport r;
  r.add("id1", Equation::id1, Residual::of(systems::id1().apply(sr.xi1, sr.mass)));
  r.add("id2", Equation::id2, Residual::of(systems::id2().apply(sr.xi2, sr.mass)));
  for (RepName rep : kAllReps) {
    const ProjectorSet& ps = shared_projectors(rep, b);
    const auto gamma_p = dirac_operator(*ps.rep, false);
    const Mat4 one = Mat4::identity(b);
    for (int k = 1; k <= 2; ++k) {
      const BispinorField psi_k = transport(k == 1 ? sr.psi1 : sr.psi2, rep);
      const BispinorField res = (one - ps.P(k)) * gamma_p.apply(ps.P(k) * psi_k, sr.mass);
      r.add(tagged("identities/" + std::to_string(k), rep), Equation::identities,
            Residual::of(res));
    }
  }
  return r;
}

ResidualReport constituent_residuals(const SplitResult& sr) {
  const Backend b = sr.psi.backend();
  ResidualReport r;
  r.add("constituent1", Equation::constituent1,
        Residual::of(systems::constituent1().apply(sr.psi1, sr.mass)));
  r.add("constituent2", Equation::constituent2,
        Residual::of(systems::constituent2().apply(sr.psi2, sr.mass)));
  r.add("constituent1/4", Equation::constituent1_4,
        Residual::of(systems::constituent1_4().apply(sr.psi1, sr.mass)));
  r.add("constituent2/4", Equation::constituent2_4,
        Residual::of(systems::constituent2_4().apply(sr.psi2, sr.mass)));
  for (RepName rep : kAllReps) {
    const ProjectorSet& ps = shared_projectors(rep, b);
    for (int k = 1; k <= 2; ++k) {
      const BispinorField psi_k = transport(k == 1 ? sr.psi1 : sr.psi2, rep);
      const BispinorField projected = ps.P(k) * psi_k;
      const BispinorField dirac = dirac_residual(projected, sr.mass);
      r.add(tagged("constituent" + std::to_string(k) + "/P", rep),
            k == 1 ? Equation::constituent1_p : Equation::constituent2_p, Residual::of(dirac));
      r.add(tagged("constituents/3/" + std::to_string(k), rep), Equation::constituents_3,
            Residual::of(ps.P(k) * dirac));
    }
  }
  return r;
}

ResidualReport chirality_obstruction(const SplitResult& sr) {
  const ProjectorSet& ps = shared_projectors(RepName::spinor, sr.psi.backend());
  const auto gamma_p = dirac_operator(*ps.rep, false);
  ResidualReport r;
  r.add("gamma.p P1 Psi(1)", Equation::chirality_obstruction,
        Residual::of(gamma_p.apply(ps.P(1) * sr.psi1, sr.mass)), Expect::nonzero);
  r.add("gamma.p P2 Psi(2)", Equation::chirality_obstruction,
        Residual::of(gamma_p.apply(ps.P(2) * sr.psi2, sr.mass)), Expect::nonzero);
  return r;
}

ResidualReport weyl_residuals(const BispinorField& f, bool check_massless) {
  if (check_massless) {
    for (const auto& t : f.terms()) {
      if (!t.momentum.mass().is_zero()) throw Error("weyl-requires-massless");
    }
  }
  const Backend b = f.backend();
  const Scalar zero = Scalar::zero(b);
  const BispinorField fs = transport(f, RepName::spinor);
  ResidualReport r;
  r.add("Weyl1", Equation::weyl1, Residual::of(weyl_plus().apply(lower(fs), zero)));
  r.add("Weyl2", Equation::weyl2, Residual::of(weyl_minus().apply(upper(fs), zero)));

  const ProjectorSet& ps = shared_projectors(f.gamma_rep().name, b);
  const auto gamma_p = dirac_operator(*ps.rep, false);
  r.add("gamma.p Q-Psi", Equation::dirac_neutrino,
        Residual::of(gamma_p.apply(ps.q_minus * f, zero)));
  r.add("gamma.p Q+Psi", Equation::dirac_neutrino,
        Residual::of(gamma_p.apply(ps.q_plus * f, zero)));
  return r;
}

BispinorField majorana_build(const BispinorField& psi, double tol) {
  if (!vanishes(dirac_residual(psi), tol, psi.max_abs())) throw Error("not-a-solution");
  return psi + charge_conjugate(psi);
}

ResidualReport majorana_residuals(const BispinorField& f, const Scalar& m, double tol) {
  const Backend b = f.backend();
  const Scalar mass = m.to(b);
  const BispinorField self = f - charge_conjugate(f);
  if (!vanishes(self, tol, f.max_abs())) throw Error("not-majorana");

  ResidualReport r;
  r.add("Psi-CPsi", Equation::majorana_condition, Residual::of(self));
  r.add("Dirac", Equation::dirac, Residual::of(dirac_residual(f, mass)));

  const BispinorField fs = transport(f, RepName::spinor);
  const SpinorField xi = upper(fs);
  const SpinorField eta = lower(fs);
  const Scalar i = Scalar::imag_unit(b);
  const Mat2 i_sigma2 = i * pauli2(b);
  const Mat2 im_sigma2 = mass * i_sigma2;
  r.add("Majorana1", Equation::majorana1,
        Residual::of(weyl_plus().apply(eta, mass) + im_sigma2 * conjugate(eta)));
  r.add("Majorana2", Equation::majorana2,
        Residual::of(weyl_minus().apply(xi, mass) - im_sigma2 * conjugate(xi)));
  r.add("xi+i.sigma2.eta*", Equation::majorana_condition,
        Residual::of(xi + i_sigma2 * conjugate(eta)));
  r.add("eta-i.sigma2.xi*", Equation::majorana_condition,
        Residual::of(eta - i_sigma2 * conjugate(xi)));
  return r;
}

}  // namespace subdirac
