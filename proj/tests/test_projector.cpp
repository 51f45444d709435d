#include <gtest/gtest.h>

#include "subdirac/projector.hpp"

using namespace subdirac;

namespace {

Mat4 diag(long a, long b, long c, long d) {
  return Mat4::diagonal({Scalar::exact(a), Scalar::exact(b), Scalar::exact(c), Scalar::exact(d)});
}

}  // namespace

TEST(Projectors, SpinorDiagonalForms) {
  const ProjectorSet& ps = shared_projectors(RepName::spinor);
  EXPECT_TRUE(exact_eq(ps.P(1), diag(1, 1, 1, 0)));
  EXPECT_TRUE(exact_eq(ps.P(2), diag(1, 1, 0, 1)));
  EXPECT_TRUE(exact_eq(ps.P(3), diag(1, 0, 1, 1)));
  EXPECT_TRUE(exact_eq(ps.P(4), diag(0, 1, 1, 1)));
  EXPECT_TRUE(exact_eq(ps.q_minus, diag(1, 1, 0, 0)));
  EXPECT_TRUE(exact_eq(ps.q_plus, diag(0, 0, 1, 1)));
}

TEST(Projectors, AlgebraInEveryRep) {
  for (RepName r : kAllReps) {
    const ProjectorSet& ps = shared_projectors(r);
    const ResidualReport rep = projector_algebra_residuals(ps);
    EXPECT_FALSE(rep.entries.empty());
    for (const auto& e : rep.entries) EXPECT_TRUE(e.residual.exact_zero) << to_string(r) << ' ' << e.name;
    Mat4 sum(Backend::exact);
    for (int i = 1; i <= 4; ++i) {
      EXPECT_TRUE(exact_eq(ps.P(i) * ps.P(i), ps.P(i)));
      EXPECT_TRUE(exact_equal(ps.P(i).trace(), Scalar::exact(3)));
      EXPECT_TRUE(commutator(ps.P(i), ps.rep->gamma5).is_zero());
      for (int j = 1; j <= 4; ++j) EXPECT_TRUE(commutator(ps.P(i), ps.P(j)).is_zero());
      sum += ps.P(i);
    }
    EXPECT_TRUE(exact_eq(sum, Scalar::exact(3) * Mat4::identity()));
    EXPECT_TRUE(exact_eq(ps.q_plus + ps.q_minus, Mat4::identity()));
    EXPECT_TRUE((ps.q_plus * ps.q_minus).is_zero());
  }
}

TEST(Projectors, FloatBuildPassesAlgebra) {
  for (RepName r : kAllReps) {
    EXPECT_TRUE(projector_algebra_residuals(shared_projectors(r, Backend::floating)).passes(1e-12));
  }
}

TEST(Projectors, TransportedByIntertwiner) {
  const ProjectorSet& base = shared_projectors(RepName::spinor);
  for (RepName r : kAllReps) {
    const Intertwiner u = intertwiner(RepName::spinor, r);
    const ProjectorSet& ps = shared_projectors(r);
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(exact_eq(u.conjugate(base.P(i)), ps.P(i)));
    EXPECT_TRUE(exact_eq(u.conjugate(base.v), ps.v));
  }
}

TEST(Projectors, BrokenRepIsRejected) {
  GammaRep bad = build_rep(RepName::spinor);
  bad.gamma[1] = -bad.gamma[1];
  bad.gamma[1].set(0, 3, Scalar::exact(5));
  try {
    build_projectors(std::make_shared<const GammaRep>(bad));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "projector-algebra-violation");
  }
}

TEST(CorsonComplement, Values) {
  const ProjectorSet& ps = shared_projectors(RepName::spinor);
  EXPECT_TRUE(exact_eq(corson_complement(ps, 1), diag(0, 0, 0, 1)));
  for (int i = 1; i <= 4; ++i) {
    const Mat4 e = corson_complement(ps, i);
    EXPECT_TRUE(exact_eq(e * e, e));
    EXPECT_TRUE((e * ps.P(i)).is_zero());
    EXPECT_TRUE(exact_equal(e.trace(), Scalar::exact(1)));
  }
  try {
    corson_complement(ps, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "index-out-of-range");
  }
}

TEST(VSwap, ExactInEveryRep) {
  for (RepName r : kAllReps) {
    const ResidualReport rep = v_swap_check(shared_projectors(r));
    EXPECT_EQ(rep.entries.size(), 5u);
    for (const auto& e : rep.entries) EXPECT_TRUE(e.residual.exact_zero) << to_string(r) << ' ' << e.name;
  }
  const ProjectorSet& ps = shared_projectors(RepName::spinor);
  const Mat4 expected = Scalar::exact(0, 1) * ps.rep->gamma[2] * ps.rep->gamma[3];
  EXPECT_TRUE(exact_eq(ps.v, expected));
}

TEST(VSwap, IdentityInsteadOfVFails) {
  const ProjectorSet& ps = shared_projectors(RepName::standard);
  const ResidualReport rep = v_swap_check(ps, Mat4::identity());
  EXPECT_FALSE(rep.at("VP1V^-1-P2").residual.exact_zero);
  EXPECT_FALSE(rep.at("VP2V^-1-P1").residual.exact_zero);
  EXPECT_TRUE(rep.at("[V,g0]").residual.exact_zero);
  EXPECT_FALSE(rep.passes(1e-10));
}
