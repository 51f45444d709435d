#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "subdirac/lorentz.hpp"
#include "support/oracle.hpp"

using namespace subdirac;

namespace {

constexpr Backend kF = Backend::floating;

BispinorField solution(const FourMomentum& p, RepName r, int label) {
  return BispinorField::single(u_spinor(p, r, label), shared_rep(r, p.backend()));
}

double component(const FourMomentum& p, int mu) { return p[mu].to_complex().real(); }

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const std::array<double, 6> kOmegas{0.5, -0.5, 1.0, -1.0, 3.0, -3.0};

}  // namespace

TEST(Generators, PinnedComponents) {
  EXPECT_EQ(generator_component(3, 0), -1);
  EXPECT_EQ(generator_component(0, 3), 1);
  EXPECT_EQ(generator_component(1, 2), -1);
  EXPECT_EQ(generator_component(2, 1), 1);
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_EQ(generator_component(mu, mu), 0);
    for (int nu = 0; nu < 4; ++nu) EXPECT_EQ(generator_component(mu, nu), -generator_component(nu, mu));
  }
}

TEST(Params, Validation) {
  EXPECT_EQ(error_code([] { LorentzParams::boost(0, 1.0); }), "invalid-lorentz-params");
  EXPECT_EQ(error_code([] { LorentzParams::rotation(0, 2, 1.0); }), "invalid-lorentz-params");
  EXPECT_EQ(error_code([] { LorentzParams::rotation(1, 4, 1.0); }), "invalid-lorentz-params");
  EXPECT_EQ(error_code([] { LorentzParams::boost(1, NAN); }), "invalid-lorentz-params");
  EXPECT_EQ(error_code([] { LorentzParams{TransformKind::boost, 1, 2, 0.3}.validate(); }),
            "invalid-lorentz-params");
}

TEST(VectorTransform, Examples) {
  EXPECT_TRUE(approx_eq(vector_transform(LorentzParams::boost(3, 0.0)).a, Mat4::identity(kF), 0.0));
  const FourMomentum p = FourMomentum::on_shell(1.0, 2.0, 2.0, 0.0);
  const FourMomentum fixed = vector_transform(LorentzParams::boost(3, std::atanh(0.0 / 3.0))).apply(p);
  for (int mu = 0; mu < 4; ++mu) EXPECT_NEAR(component(fixed, mu), component(p, mu), 1e-15);

  const FourMomentum q = FourMomentum::on_shell(1.0, 2.0, 0.0, 0.0);
  const FourMomentum turned = vector_transform(LorentzParams::rotation(1, 2, std::numbers::pi / 2)).apply(q);
  EXPECT_NEAR(component(turned, 1), 0.0, 1e-15);
  EXPECT_NEAR(component(turned, 2), -2.0, 1e-15);
  EXPECT_NEAR(turned.minkowski_square().to_complex().real(), 1.0, 1e-12);
}

TEST(VectorTransform, BoostDirection) {
  // tanh w = v: boosting p^3 = m sinh(w) by w brings it to rest.
  const double w = 0.8;
  const FourMomentum p = FourMomentum::on_shell(2.0, 0.0, 0.0, 2.0 * std::sinh(w));
  const FourMomentum rest = vector_transform(LorentzParams::boost(3, w)).apply(p);
  EXPECT_NEAR(component(rest, 0), 2.0, 1e-12);
  EXPECT_NEAR(component(rest, 3), 0.0, 1e-12);
}

TEST(VectorTransform, MetricIsPreserved) {
  oracle::Gen gen(0x1e);
  for (int trial = 0; trial < 200; ++trial) {
    const double w = gen.real(-5, 5);
    const int k = static_cast<int>(gen.integer(1, 3));
    const int j = static_cast<int>(gen.integer(1, 2));
    EXPECT_LT(vector_transform(LorentzParams::boost(k, w)).metric_defect, 1e-12 * std::cosh(2 * w));
    EXPECT_LT(vector_transform(LorentzParams::rotation(j, 3, w)).metric_defect, 1e-12);
  }
}

TEST(SpinorTransform, IdentityGroupAndUnitarity) {
  for (RepName r : kAllReps) {
    EXPECT_TRUE(approx_eq(spinor_transform(LorentzParams::boost(3, 0.0), r), Mat4::identity(kF), 0.0));
    const Mat4 s1 = spinor_transform(LorentzParams::boost(3, 0.4), r);
    const Mat4 s2 = spinor_transform(LorentzParams::boost(3, 1.1), r);
    EXPECT_TRUE(approx_eq(s1 * s2, spinor_transform(LorentzParams::boost(3, 1.5), r), 1e-10));
    const Mat4 rot = spinor_transform(LorentzParams::rotation(1, 2, 1.3), r);
    EXPECT_TRUE(approx_eq(rot.adjoint() * rot, Mat4::identity(kF), 1e-12));
    EXPECT_GT((s2.adjoint() * s2 - Mat4::identity(kF)).max_abs(), 0.1);
  }
}

TEST(SpinorTransform, MatchesOracleClosedForm) {
  // S_12 = exp(+(i/2) w sigma_12) and sigma_12^2 = I, so S = cos(w/2) + i sin(w/2) sigma_12.
  for (double w : kOmegas) {
    const oracle::M4 expected = oracle::add(oracle::scale(oracle::identity(), std::cos(w / 2)),
                                            oracle::sigma_lower(1, 2), oracle::I * std::sin(w / 2));
    EXPECT_LT(oracle::max_diff(expected, spinor_transform(LorentzParams::rotation(1, 2, w), RepName::spinor)),
              1e-12);
    // S_03 = exp(-(i/2) w sigma_03) with (i sigma_03)^2 = I.
    const oracle::M4 boost = oracle::add(oracle::scale(oracle::identity(), std::cosh(w / 2)),
                                         oracle::sigma_lower(0, 3), -oracle::I * std::sinh(w / 2));
    EXPECT_LT(oracle::max_diff(boost, spinor_transform(LorentzParams::boost(3, w), RepName::spinor)),
              1e-12 * std::cosh(w));
  }
}

TEST(Covariance, GridInEveryRep) {
  for (RepName r : kAllReps) {
    for (double w : kOmegas) {
      EXPECT_LT(covariance_check(LorentzParams::boost(3, w), r).max_residual(), 1e-10);
      EXPECT_LT(covariance_check(LorentzParams::rotation(1, 2, w), r).max_residual(), 1e-10);
    }
    for (auto params : {LorentzParams::boost(1, 0.9), LorentzParams::boost(2, -1.4),
                        LorentzParams::rotation(1, 3, 2.0), LorentzParams::rotation(2, 3, -0.7)}) {
      EXPECT_LT(covariance_check(params, r).max_residual(), 1e-10);
    }
    EXPECT_EQ(covariance_check(LorentzParams::boost(3, 0.0), r).max_residual(), 0.0);
  }
}

TEST(Covariance, FlippedGeneratorFails) {
  for (RepName r : kAllReps) {
    EXPECT_GT(covariance_check(LorentzParams::boost(3, 1.0), r, -1).max_residual(), 0.1);
    EXPECT_GT(covariance_check(LorentzParams::rotation(1, 2, 1.0), r, -1).max_residual(), 0.1);
  }
}

TEST(Covariance, TransformedSolutions) {
  oracle::Gen gen(0x1f);
  for (int trial = 0; trial < 100; ++trial) {
    const FourMomentum p = FourMomentum::on_shell(gen.real(0.1, 10), gen.real(-5, 5), gen.real(-5, 5),
                                                  gen.real(-5, 5));
    const LorentzParams params = trial % 2 ? LorentzParams::boost(3, kOmegas[trial % 6])
                                           : LorentzParams::rotation(1, 2, kOmegas[trial % 6]);
    const SplitResult sr = split(solution(p, RepName::spinor, 1 + trial % 2), p.mass());
    EXPECT_LT(transformed_split_residuals(sr, params).max_residual(), 1e-10) << trial;
    const BispinorField moved = transform_field(solution(p, RepName::majorana, 1), params);
    EXPECT_LT(dirac_residual(moved, p.mass()).max_abs(), 1e-10);
  }
}

TEST(PiCommutation, ExactAndFloat) {
  const std::vector<double> omegas{0.5, 1.3, -3.0};
  for (RepName r : kAllReps) {
    const ResidualReport rep = pi_commutation_check(r, omegas);
    EXPECT_TRUE(rep.at("[sigma03,P1]").residual.exact_zero);
    EXPECT_TRUE(rep.at("[sigma12,P2]").residual.exact_zero);
    EXPECT_LT(rep.at("[S12(1.3),P2]").residual.magnitude, 1e-12);
    EXPECT_GT(rep.at("[S01(1),P1]").residual.magnitude, 1e-3);
    EXPECT_TRUE(rep.passes(1e-10));
  }
}

TEST(SpecialFrame, Examples) {
  const SpecialFrame rest = special_frame(FourMomentum::on_shell(2.0, 0, 0, 0));
  EXPECT_EQ(rest.rotation.omega, 0.0);
  EXPECT_EQ(rest.boost.omega, 0.0);

  const FourMomentum p = FourMomentum::exact(3, 2, 2, 0, 1);
  const SpecialFrame f = special_frame(p);
  EXPECT_EQ(f.boost.omega, 0.0);
  EXPECT_NEAR(f.rotation.omega, std::numbers::pi / 4, 1e-15);
  const FourMomentum moved = vector_transform(f.boost).apply(vector_transform(f.rotation).apply(p));
  EXPECT_NEAR(component(moved, 0), 3.0, 1e-12);
  EXPECT_NEAR(component(moved, 1), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(component(moved, 2), 0.0, 1e-12);
  EXPECT_NEAR(component(moved, 3), 0.0, 1e-12);

  EXPECT_EQ(error_code([] { special_frame(FourMomentum::exact(1, 0, 0, 1, 0)); }),
            "special-frame-requires-mass");
}

TEST(SpecialFrame, FuzzedSplits) {
  oracle::Gen gen(0x20);
  for (int trial = 0; trial < 100; ++trial) {
    const FourMomentum p = FourMomentum::on_shell(gen.real(0.1, 10), gen.real(-5, 5), gen.real(-5, 5),
                                                  gen.real(-5, 5));
    const SplitResult sr = split(solution(p, RepName::spinor, 1 + trial % 2), p.mass());
    const ResidualReport r = special_frame_residuals(sr);
    EXPECT_TRUE(r.passes(1e-10)) << trial;
    EXPECT_LT(r.at("mass drift").residual.magnitude, 1e-12);
  }
  const FourMomentum a = FourMomentum::exact(3, 2, 2, 0, 1);
  const FourMomentum b = FourMomentum::exact(3, 2, 0, 2, 1);
  const BispinorField two = solution(a, RepName::spinor, 1) + solution(b, RepName::spinor, 1);
  const SplitResult sr = split(two, Scalar::exact(1));
  EXPECT_EQ(error_code([&] { special_frame_residuals(sr); }), "special-frame-needs-single-momentum");
}

TEST(SpecialFrame, VSymmetryAtMatrixLevel) {
  for (RepName r : kAllReps) {
    for (const auto& e : v_special_frame_check(r).entries) EXPECT_TRUE(e.residual.exact_zero) << e.name;
    EXPECT_TRUE(v_special_frame_check(r, kF).passes(1e-14));
  }
}
