#pragma once

#include <array>
#include <memory>

#include "subdirac/gamma.hpp"
#include "subdirac/report.hpp"

namespace subdirac {

/// Chiral projectors, the four mutually commuting rank-3 projectors P1..P4 and
/// the swap matrix V = i gamma^2 gamma^3, all built from one representation.
struct ProjectorSet {
  std::shared_ptr<const GammaRep> rep;
  Mat4 q_plus;
  Mat4 q_minus;
  std::array<Mat4, 4> p;  ///< p[0] is P1, ..., p[3] is P4
  Mat4 v;

  Backend backend() const { return v.backend(); }
  /// P_i for i in 1..4.
  const Mat4& P(int i) const { return p.at(static_cast<std::size_t>(i - 1)); }
  ProjectorSet promoted() const;
};

/// Builds Q+-, P1..P4 and V from `rep` and checks their algebra (exactly for
/// exact reps, to 1e-12 otherwise). Throws "projector-algebra-violation".
///
///   P1 = (3 - g5 - g0 g3 + i g1 g2) / 4     P2 = (3 - g5 + g0 g3 - i g1 g2) / 4
///   P3 = (3 + g5 + g0 g3 + i g1 g2) / 4     P4 = (3 + g5 - g0 g3 - i g1 g2) / 4
ProjectorSet build_projectors(std::shared_ptr<const GammaRep> rep);
ProjectorSet build_projectors(RepName name, Backend b = Backend::exact);

/// Algebra residuals: Q+- idempotence, completeness and orthogonality; P_i
/// idempotence, pairwise commutators, sum 3I, trace 3, [P_i, gamma^5].
ResidualReport projector_algebra_residuals(const ProjectorSet& set);

/// epsilon_i = I - P_i, i in 1..4.
Mat4 corson_complement(const ProjectorSet& set, int i);

/// V P1 V^-1 = P2, V P2 V^-1 = P1, [V, gamma^0] = 0, [V, gamma^1] = 0 and
/// V V^dagger = I, using the candidate `v` in place of the set's V.
ResidualReport v_swap_check(const ProjectorSet& set, const Mat4& v);
inline ResidualReport v_swap_check(const ProjectorSet& set) { return v_swap_check(set, set.v); }

/// Cached, already verified projector set for (name, backend).
const ProjectorSet& shared_projectors(RepName name, Backend b = Backend::exact);

}  // namespace subdirac
