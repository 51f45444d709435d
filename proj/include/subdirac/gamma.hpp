#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "subdirac/matrix.hpp"

namespace subdirac {

enum class RepName { spinor, standard, majorana };

std::string to_string(RepName r);
/// Throws Error("unknown-rep") for anything but spinor/standard/majorana.
RepName rep_from_string(const std::string& name);

inline constexpr std::array<RepName, 3> kAllReps{RepName::spinor, RepName::standard,
                                                 RepName::majorana};

/// Metric signature entry g^{mu mu} of diag(1,-1,-1,-1).
constexpr int metric_sign(int mu) { return mu == 0 ? 1 : -1; }

/// A pinned set of Dirac matrices gamma^0..gamma^3 with gamma^5 and the metric.
///
/// Built in the exact backend; `promoted()` gives the floating copy used by the
/// Lorentz checks. All four gammas carry upper (contravariant) indices.
struct GammaRep {
  RepName name;
  std::array<Mat4, 4> gamma;
  Mat4 gamma5;
  Mat4 metric;

  Backend backend() const { return gamma5.backend(); }
  /// gamma_mu = g_{mu mu} gamma^mu.
  Mat4 lowered(int mu) const;
  GammaRep promoted() const;
};

/// Pinned representation by name.
///
/// The spinor representation is fixed by the component form of the Dirac
/// equation with Psi = (xi^1, xi^2, eta_1, eta_2): gamma^0 = [[0,1],[1,0]],
/// gamma^k = [[0,-sigma^k],[sigma^k,0]], giving gamma^5 = diag(-1,-1,1,1).
/// Standard is the Dirac-Pauli basis; Majorana has purely imaginary gammas.
GammaRep build_rep(RepName name);
GammaRep build_rep(const std::string& name);

/// Shared immutable instance, cached per (name, backend).
std::shared_ptr<const GammaRep> shared_rep(RepName name, Backend b = Backend::exact);

/// gamma^5 = -i gamma^0 gamma^1 gamma^2 gamma^3.
Mat4 gamma5_of(const std::array<Mat4, 4>& gamma);

struct CliffordResidual {
  int mu;
  int nu;
  Mat4 residual;  ///< {gamma^mu, gamma^nu} - 2 g^{mu nu} I
};

/// The ten anticommutator residuals for mu <= nu.
std::vector<CliffordResidual> clifford_residual(const GammaRep& rep);
std::vector<CliffordResidual> clifford_residual(const std::array<Mat4, 4>& gamma);

/// sigma_{mu nu} = (i/2)(gamma_mu gamma_nu - gamma_nu gamma_mu), indices lowered.
Mat4 sigma(const GammaRep& rep, int mu, int nu);

/// Unitary U with U gamma^mu_from U^dagger = gamma^mu_to.
///
/// Stored as a Gaussian-integer matrix T and a positive integer k with
/// T T^dagger = k I, so U = T / sqrt(k). Conjugation X -> U X U^dagger is then
/// T X T^dagger / k and stays exact even when sqrt(k) is irrational.
class Intertwiner {
 public:
  Intertwiner(RepName from, RepName to, Mat4 scaled, long norm_sq);

  RepName from() const { return from_; }
  RepName to() const { return to_; }
  const Mat4& scaled() const { return scaled_; }
  long norm_sq() const { return norm_sq_; }

  /// True when sqrt(k) is an integer, so U has Gaussian-rational entries.
  bool exact_unitary() const;
  /// U in the requested backend. Exact is only available if exact_unitary().
  Mat4 unitary(Backend b) const;
  /// U X U^dagger in the backend of x.
  Mat4 conjugate(const Mat4& x) const;
  /// U X U^T in the backend of x; the law for matrices acting on Psi*.
  Mat4 congruence(const Mat4& x) const;
  /// Matrix that maps bispinor amplitudes from `from` to `to`: U when it is
  /// representable in backend b, otherwise T (U scaled by sqrt(k)).
  Mat4 transport_matrix(Backend b) const;
  Intertwiner inverse() const;

 private:
  RepName from_;
  RepName to_;
  Mat4 scaled_;
  long norm_sq_;
};

/// Pinned intertwiner; verified exactly on construction, throws
/// "intertwiner-invalid" if the pinned matrix fails to map the gammas.
/// Results are cached, so repeated calls are cheap.
Intertwiner intertwiner(RepName from, RepName to);

/// Matrix C of the charge conjugation Psi -> C Psi*.
///
/// In the spinor representation C = i gamma^2. Other representations use
/// U (i gamma^2) U^T, which keeps C gamma^mu* C^-1 = -gamma^mu; this equals
/// i gamma^2 of the standard representation but not of the Majorana one,
/// where all gammas are imaginary.
Mat4 charge_conjugation_matrix(const GammaRep& rep);

}  // namespace subdirac
