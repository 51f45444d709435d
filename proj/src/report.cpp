#include "subdirac/report.hpp"

#include <algorithm>

#include "subdirac/error.hpp"

namespace subdirac {

std::string_view equation_tag(Equation e) {
  switch (e) {
    case Equation::dirac: return "Dirac1";
    case Equation::dirac_spinor_components: return "Dirac2";
    case Equation::clifford: return "clifford";
    case Equation::gamma5: return "gamma5";
    case Equation::chiral_projectors: return "Q";
    case Equation::weyl1: return "Weyl1";
    case Equation::weyl2: return "Weyl2";
    case Equation::dirac_neutrino: return "DiracNeutrino";
    case Equation::charge_conjugation: return "C";
    case Equation::majorana_condition: return "Psi=CPsi";
    case Equation::majorana1: return "Majorana1";
    case Equation::majorana2: return "Majorana2";
    case Equation::split_definitions: return "DEF1";
    case Equation::def3: return "def3";
    case Equation::def4: return "def4";
    case Equation::id1: return "id1";
    case Equation::id2: return "id2";
    case Equation::constituent1: return "constituent1";
    case Equation::constituent2: return "constituent2";
    case Equation::constituent1_4: return "constituent1/4";
    case Equation::constituent2_4: return "constituent2/4";
    case Equation::constituent1_p: return "constituent1/P";
    case Equation::constituent2_p: return "constituent2/P";
    case Equation::constituents_3: return "constituents/3";
    case Equation::identities: return "identities";
    case Equation::psi: return "psi";
    case Equation::projectors: return "PRO";
    case Equation::corson_complement: return "epsilon";
    case Equation::v_symmetry: return "V";
    case Equation::intertwiner: return "unitary-equivalence";
    case Equation::pconditions: return "Pconditions";
    case Equation::p_prime: return "P'";
    case Equation::pi_commutation: return "S";
    case Equation::special_frame: return "special-frame";
    case Equation::p1a: return "P1a";
    case Equation::p2a: return "P2a";
    case Equation::chirality_obstruction: return "CONSTITUENTS4-nonchiral";
  }
  return "?";
}

const ResidualEntry& ResidualReport::at(std::string_view name) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const ResidualEntry& e) { return e.name == name; });
  if (it == entries.end()) throw Error("no-such-residual", std::string(name));
  return *it;
}

double ResidualReport::max_residual() const {
  double m = 0.0;
  for (const auto& e : entries) {
    if (e.expect == Expect::vanish) m = std::max(m, e.residual.magnitude);
  }
  return m;
}

bool ResidualReport::passes(double tol, double control_floor) const {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const ResidualEntry& e) { return e.passes(tol, control_floor); });
}

}  // namespace subdirac
