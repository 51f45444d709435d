#pragma once

#include "subdirac/field.hpp"
#include "subdirac/projector.hpp"
#include "subdirac/report.hpp"

namespace subdirac {

/// Component systems of the free massive Dirac equation in the spinor
/// representation, transcribed line by line as residual operators
/// (left-hand side minus right-hand side). Column order is the field the
/// system acts on: (xi^1, xi^2, eta_1, eta_2) for bispinors.
namespace systems {

/// The Dirac equation written out for Psi = (xi^1, xi^2, eta_1, eta_2).
MomentumOperator<4, 4> dirac_components();
/// m xi_(1) = ((p0+p3) eta_1, (p1+ip2) eta_1); acts on Psi.
MomentumOperator<2, 4> xi1_definition();
/// m xi_(2) = ((p1-ip2) eta_2, (p0-p3) eta_2); acts on Psi.
MomentumOperator<2, 4> xi2_definition();
/// (p1+ip2) xi_(1)^1 - (p0+p3) xi_(1)^2; acts on xi_(1).
MomentumOperator<1, 2> id1();
/// (p0-p3) xi_(2)^1 - (p1-ip2) xi_(2)^2; acts on xi_(2).
MomentumOperator<1, 2> id2();
/// Three-line systems on Psi_(1) and Psi_(2).
MomentumOperator<3, 4> constituent1();
MomentumOperator<3, 4> constituent2();
/// Four-line systems (the three lines plus the matching identity).
MomentumOperator<4, 4> constituent1_4();
MomentumOperator<4, 4> constituent2_4();

}  // namespace systems

/// Massive solution split into its two subsolution bispinors.
///
/// psi1 = (xi_(1)^1, xi_(1)^2, eta_1, eta_2) and
/// psi2 = (xi_(2)^1, xi_(2)^2, eta_1, eta_2), with P1 psi1 + P2 psi2 = psi.
/// In two-index spinor notation xi_(1)^1, xi_(2)^1, xi_(1)^2, xi_(2)^2 are
/// psi^{1 1'}_{1'}, psi^{1 2'}_{2'}, psi^{2 1'}_{1'}, psi^{2 2'}_{2'}.
struct SplitResult {
  BispinorField psi;
  BispinorField psi1;
  BispinorField psi2;
  SpinorField xi1;
  SpinorField xi2;
  Scalar mass;
};

struct SplitOptions {
  /// Reject inputs that do not solve the Dirac equation.
  bool check_solution = true;
  /// Float tolerance for that check, relative to 1 + |psi|.
  double tol = 1e-10;
};

/// Errors: "split-requires-mass" (m = 0), "split-requires-spinor-rep",
/// "not-a-solution".
SplitResult split(const BispinorField& psi, const Scalar& m, const SplitOptions& options = {});

/// Recombination xi_(1) + xi_(2) = xi (two lines) and P1 psi1 + P2 psi2 = psi.
ResidualReport recombination_residuals(const SplitResult& sr);

/// The identities between the xi_(k) components, and their
/// representation-free form (1 - P_i) gamma.p P_i Psi_(i) in every pinned
/// representation.
ResidualReport identity_residuals(const SplitResult& sr);

/// The three-line and four-line systems, (gamma.p - m) P_k Psi_(k) and
/// P_i (gamma.p - m) P_i Psi_(i); the projector forms in every pinned
/// representation.
ResidualReport constituent_residuals(const SplitResult& sr);

/// gamma.p P1 Psi_(1) and gamma.p P2 Psi_(2) without the mass term. These are
/// m P_k Psi_(k) and cannot vanish; entries are negative controls.
ResidualReport chirality_obstruction(const SplitResult& sr);

/// Two-component Weyl equations on the eta and xi halves plus
/// gamma.p Q-+ Psi. Throws "weyl-requires-massless" unless `check_massless`
/// is false.
ResidualReport weyl_residuals(const BispinorField& f, bool check_massless = true);

/// Psi + C Psi. Throws "not-a-solution" if psi does not solve the Dirac
/// equation (each term with its own mass).
BispinorField majorana_build(const BispinorField& psi, double tol = 1e-10);

/// Self-conjugacy, the Dirac equation, the two-component Majorana equations
/// and xi = -i sigma^2 eta*, eta = i sigma^2 xi*. Throws "not-majorana" when
/// f != C f beyond `tol`.
ResidualReport majorana_residuals(const BispinorField& f, const Scalar& m, double tol = 1e-10);

/// Amplitudes moved into `to` by the pinned intertwiner.
BispinorField transport(const BispinorField& f, RepName to);

}  // namespace subdirac
