#pragma once

#include <span>

#include "subdirac/field.hpp"
#include "subdirac/report.hpp"
#include "subdirac/subsolution.hpp"

namespace subdirac {

enum class TransformKind { boost, rotation };

/// One-parameter Lorentz transformation in the coordinate plane (mu, nu):
/// rapidity for boosts, angle in radians for rotations.
struct LorentzParams {
  TransformKind kind = TransformKind::boost;
  int mu = 0;
  int nu = 3;
  double omega = 0.0;

  /// Boost in the (0, axis) plane.
  static LorentzParams boost(int axis, double rapidity);
  /// Rotation in the (j, k) plane, j < k spatial.
  static LorentzParams rotation(int j, int k, double angle);

  /// Throws "invalid-lorentz-params": indices out of range or equal, a boost
  /// plane without index 0, or a rotation plane with it.
  void validate() const;
};

/// Pinned antisymmetric I^{mu nu}: I^{0k} = 1 = -I^{k0} for boosts and
/// I^{jk} = -1 = -I^{kj} (j < k) for rotations, so that the (0,3) and (1,2)
/// transforms are exp(-(i/2) w sigma_03) and exp(+(i/2) w sigma_12).
int generator_component(int mu, int nu);

/// a^nu_mu acting on contravariant vectors, x'^nu = a^nu_mu x^mu.
struct VectorTransform {
  Mat4 a;               ///< floating, real entries
  double metric_defect;  ///< max |a^T g a - g|

  FourMomentum apply(const FourMomentum& p) const;
};

/// exp(w K) with K^nu_mu = I^{nu lambda} g_{lambda mu}, in closed form
/// (cosh/sinh for boosts, cos/sin for rotations).
VectorTransform vector_transform(const LorentzParams& params);

/// X with S = exp(X): X = -(i/4) w sigma_{ab} I^{ab} = -(i/2) w I^{mu nu} sigma_{mu nu}.
/// `generator_sign` = -1 flips I^{mu nu}; it exists for negative controls.
Mat4 spinor_generator(const LorentzParams& params, RepName rep, int generator_sign = +1);

/// S = exp(X) by mat_exp, cross-checked against the closed form
/// cosh/sinh (X^2 > 0) or cos/sin (X^2 < 0) to 1e-12. Throws
/// "exp-cross-check" on disagreement.
Mat4 spinor_transform(const LorentzParams& params, RepName rep, int generator_sign = +1);

/// S gamma^mu S^-1 a^nu_mu - gamma^nu for every nu, and idempotence of
/// P'_k = S P_k S^-1 for k = 1..4.
ResidualReport covariance_check(const LorentzParams& params, RepName rep,
                                int generator_sign = +1);

/// Psi'(x') = S Psi(x): amplitudes multiplied by S, momenta mapped by a.
BispinorField transform_field(const BispinorField& f, const LorentzParams& params);

/// Dirac equation for S Psi and (gamma.p' - m) P'_k S Psi_(k) for k = 1, 2.
ResidualReport transformed_split_residuals(const SplitResult& sr, const LorentzParams& params);

/// Exact [sigma_03, P_i] and [sigma_12, P_i]; floating [S_03(w), P_i] and
/// [S_12(w), P_i] for every w; and the control [S_01(1), P1], which must not
/// vanish.
ResidualReport pi_commutation_check(RepName rep, std::span<const double> omegas);

struct SpecialFrame {
  LorentzParams rotation;  ///< (1,2) plane, zeroes p^2
  LorentzParams boost;     ///< (0,3) plane, zeroes p^3
};

/// Throws "special-frame-requires-mass" for m = 0.
SpecialFrame special_frame(const FourMomentum& p);

/// Moves a single-momentum split into its special frame and checks
/// p'^2 = p'^3 = 0, the invariant mass, the reduced equations
/// (gamma^0 p^0 - gamma^1 p^1 - m) P_k Psi'_(k) = 0 and that V P1 Psi'_(1)
/// solves the second of them.
ResidualReport special_frame_residuals(const SplitResult& sr);

/// Matrix-level special-frame symmetry: V commutes with every coefficient of
/// gamma^0 p^0 - gamma^1 p^1 - m and V P1 V^-1 = P2.
ResidualReport v_special_frame_check(RepName rep, Backend b = Backend::exact);

}  // namespace subdirac
