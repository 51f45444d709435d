#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subdirac/scalar.hpp"

namespace subdirac {

/// The equation systems a residual can belong to. `equation_tag` gives the
/// stable label used in reports.
enum class Equation {
  dirac,
  dirac_spinor_components,
  clifford,
  gamma5,
  chiral_projectors,
  weyl1,
  weyl2,
  dirac_neutrino,
  charge_conjugation,
  majorana_condition,
  majorana1,
  majorana2,
  split_definitions,
  def3,
  def4,
  id1,
  id2,
  constituent1,
  constituent2,
  constituent1_4,
  constituent2_4,
  constituent1_p,
  constituent2_p,
  constituents_3,
  identities,
  psi,
  projectors,
  corson_complement,
  v_symmetry,
  intertwiner,
  pconditions,
  p_prime,
  pi_commutation,
  special_frame,
  p1a,
  p2a,
  chirality_obstruction,
};

std::string_view equation_tag(Equation e);

/// Size of a residual: an exact-zero flag for the exact backend, otherwise the
/// largest entry modulus.
struct Residual {
  Backend backend = Backend::exact;
  bool exact_zero = false;
  double magnitude = 0.0;

  static Residual exact(bool is_zero, double magnitude) {
    return {Backend::exact, is_zero, is_zero ? 0.0 : magnitude};
  }
  static Residual floating(double magnitude) { return {Backend::floating, false, magnitude}; }

  template <typename T>
  static Residual of(const T& value) {
    if (value.backend() == Backend::exact) return exact(value.is_zero(), value.max_abs());
    return floating(value.max_abs());
  }

  /// Zero within `tol` (exact residuals must be literally zero).
  bool vanishes(double tol) const {
    return backend == Backend::exact ? exact_zero : magnitude < tol;
  }
};

/// Whether an entry is expected to vanish or is a negative control that must
/// stay large.
enum class Expect { vanish, nonzero };

struct ResidualEntry {
  std::string name;
  Equation equation;
  Residual residual;
  Expect expect = Expect::vanish;
  /// Tolerance pinned by the check itself; overrides the caller's tolerance.
  std::optional<double> pinned_tol;

  bool passes(double tol, double control_floor) const {
    if (expect == Expect::nonzero) return residual.magnitude > control_floor;
    return residual.vanishes(pinned_tol.value_or(tol));
  }
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;

  void add(std::string name, Equation eq, Residual r, Expect expect = Expect::vanish) {
    entries.push_back({std::move(name), eq, r, expect, std::nullopt});
  }
  void add_pinned(std::string name, Equation eq, Residual r, double tol) {
    entries.push_back({std::move(name), eq, r, Expect::vanish, tol});
  }
  void append(const ResidualReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  /// Throws Error("no-such-residual") when absent.
  const ResidualEntry& at(std::string_view name) const;
  /// Largest magnitude over entries expected to vanish.
  double max_residual() const;
  /// Every vanishing entry is exactly zero (exact) or below its tolerance,
  /// and every negative control exceeds `control_floor`.
  bool passes(double tol, double control_floor = 1e-3) const;
};

}  // namespace subdirac
