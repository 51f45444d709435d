#include <gtest/gtest.h>

#include "subdirac/field.hpp"
#include "subdirac/gamma.hpp"
#include "subdirac/subsolution.hpp"
#include "support/oracle.hpp"

using namespace subdirac;

namespace {

constexpr Backend kE = Backend::exact;
constexpr Backend kF = Backend::floating;

bool all_zero(const std::vector<CliffordResidual>& rs) {
  for (const auto& r : rs) {
    if (!r.residual.is_zero()) return false;
  }
  return true;
}

Mat2 block(const Mat4& m, int bi, int bj) {
  Mat2 out(m.backend());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.set(i, j, m(2 * bi + i, 2 * bj + j));
  return out;
}

}  // namespace

TEST(Gamma, SpinorRepMatchesHandTypedMatrices) {
  const auto rep = shared_rep(RepName::spinor);
  const auto g = oracle::spinor_gammas();
  for (int mu = 0; mu < 4; ++mu) EXPECT_EQ(oracle::max_diff(g[mu], rep->gamma[mu]), 0.0) << mu;
}

TEST(Gamma, SpinorGamma5IsPinned) {
  const auto rep = shared_rep(RepName::spinor);
  EXPECT_TRUE(exact_eq(rep->gamma5, Mat4::diagonal({Scalar::exact(-1), Scalar::exact(-1),
                                                    Scalar::exact(1), Scalar::exact(1)})));
  EXPECT_TRUE(block(rep->gamma[0], 0, 0).is_zero());
}

TEST(Gamma, SpinorRepReproducesComponentSystem) {
  EXPECT_TRUE(exact_eq(dirac_operator(*shared_rep(RepName::spinor)), systems::dirac_components()));
  EXPECT_FALSE(exact_eq(dirac_operator(*shared_rep(RepName::standard)), systems::dirac_components()));
}

TEST(Gamma, CliffordHoldsExactlyInEveryRep) {
  for (RepName r : kAllReps) {
    const auto rep = shared_rep(r);
    const auto rs = clifford_residual(*rep);
    EXPECT_EQ(rs.size(), 10u);
    EXPECT_TRUE(all_zero(rs)) << to_string(r);
    EXPECT_TRUE(exact_eq(rep->gamma5 * rep->gamma5, Mat4::identity()));
    EXPECT_TRUE(exact_eq(rep->gamma5, gamma5_of(rep->gamma)));
    for (int mu = 0; mu < 4; ++mu) EXPECT_TRUE(anticommutator(rep->gamma5, rep->gamma[mu]).is_zero());
  }
}

TEST(Gamma, WholeSignFlipOfGamma3IsStillClifford) {
  // Negating all of gamma^3 maps a Clifford set to a Clifford set.
  auto g = shared_rep(RepName::spinor)->gamma;
  g[3] = -g[3];
  EXPECT_TRUE(all_zero(clifford_residual(g)));
}

TEST(Gamma, BlockSignFlipOfGamma3BreaksAnticommutation) {
  auto g = shared_rep(RepName::spinor)->gamma;
  for (int i = 2; i < 4; ++i)
    for (int j = 0; j < 2; ++j) g[3].set(i, j, -g[3](i, j));
  // {gamma^0, gamma^3'} = -2 diag(sigma3, sigma3) by hand.
  const Mat4 expected = Mat4::diagonal({Scalar::exact(-2), Scalar::exact(2), Scalar::exact(-2),
                                        Scalar::exact(2)});
  for (const auto& r : clifford_residual(g)) {
    if (r.mu == 0 && r.nu == 3) {
      EXPECT_TRUE(exact_eq(r.residual, expected));
    } else if (r.mu != 3 && r.nu != 3) {
      EXPECT_TRUE(r.residual.is_zero());
    }
  }
}

TEST(Gamma, Sigma) {
  for (RepName r : kAllReps) {
    const auto rep = shared_rep(r);
    EXPECT_TRUE(exact_eq(sigma(*rep, 0, 3), -sigma(*rep, 3, 0)));
    EXPECT_TRUE(sigma(*rep, 2, 2).is_zero());
  }
  const auto rep = shared_rep(RepName::spinor);
  const Mat4 s12 = sigma(*rep, 1, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) EXPECT_TRUE(s12(i, j).is_zero());
  EXPECT_TRUE(commutator(s12, rep->gamma5).is_zero());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      EXPECT_LT(oracle::max_diff(oracle::sigma_lower(mu, nu), sigma(*rep, mu, nu)), 1e-15);
}

TEST(Gamma, Names) {
  EXPECT_EQ(rep_from_string("majorana"), RepName::majorana);
  EXPECT_EQ(build_rep("standard").name, RepName::standard);
  try {
    rep_from_string("weyl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-rep");
  }
}

TEST(Intertwiner, MapsGammasAndIsUnitary) {
  for (RepName from : kAllReps) {
    for (RepName to : kAllReps) {
      const Intertwiner u = intertwiner(from, to);
      const auto a = shared_rep(from);
      const auto b = shared_rep(to);
      for (int mu = 0; mu < 4; ++mu) EXPECT_TRUE(exact_eq(u.conjugate(a->gamma[mu]), b->gamma[mu]));
      EXPECT_TRUE(exact_eq(u.conjugate(a->gamma5), b->gamma5));
      const Mat4 t = u.scaled();
      EXPECT_TRUE(exact_eq(t * t.adjoint(), Scalar::exact(u.norm_sq()) * Mat4::identity()));
      const Mat4 uf = u.unitary(kF);
      EXPECT_TRUE(approx_eq(uf * uf.adjoint(), Mat4::identity(kF), 1e-14));
      EXPECT_TRUE(all_zero(clifford_residual(
          std::array<Mat4, 4>{u.conjugate(a->gamma[0]), u.conjugate(a->gamma[1]),
                              u.conjugate(a->gamma[2]), u.conjugate(a->gamma[3])})));
    }
  }
  EXPECT_TRUE(exact_eq(intertwiner(RepName::spinor, RepName::spinor).unitary(kE), Mat4::identity()));
}

TEST(Intertwiner, ExactnessOfNormalisation) {
  EXPECT_TRUE(intertwiner(RepName::spinor, RepName::majorana).exact_unitary());
  const Intertwiner std_u = intertwiner(RepName::spinor, RepName::standard);
  EXPECT_FALSE(std_u.exact_unitary());
  try {
    std_u.unitary(kE);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "intertwiner-not-exact");
  }
  EXPECT_TRUE(exact_eq(std_u.transport_matrix(kE), std_u.scaled()));
  const Intertwiner back = std_u.inverse();
  EXPECT_EQ(back.from(), RepName::standard);
  EXPECT_TRUE(approx_eq(back.unitary(kF) * std_u.unitary(kF), Mat4::identity(kF), 1e-15));
}

TEST(ChargeConjugation, MatrixConjugatesGammasInEveryRep) {
  for (RepName r : kAllReps) {
    const auto rep = shared_rep(r);
    const Mat4 c = charge_conjugation_matrix(*rep);
    EXPECT_TRUE(exact_eq(c * c.adjoint(), Mat4::identity()));
    for (int mu = 0; mu < 4; ++mu) {
      EXPECT_TRUE(exact_eq(c * rep->gamma[mu].conj() * c.adjoint(), -rep->gamma[mu])) << to_string(r);
    }
  }
  const auto sp = shared_rep(RepName::spinor);
  EXPECT_TRUE(exact_eq(charge_conjugation_matrix(*sp), Scalar::exact(0, 1) * sp->gamma[2]));
  const auto st = shared_rep(RepName::standard);
  EXPECT_TRUE(exact_eq(charge_conjugation_matrix(*st), Scalar::exact(0, 1) * st->gamma[2]));
  // In the Majorana rep i gamma^2 is real and would fail the conjugation law.
  const auto mj = shared_rep(RepName::majorana);
  const Mat4 naive = Scalar::exact(0, 1) * mj->gamma[2];
  EXPECT_FALSE(exact_eq(naive * mj->gamma[0].conj() * naive.adjoint(), -mj->gamma[0]));
}
