#include "subdirac/projector.hpp"

#include <map>
#include <mutex>
#include <string>

namespace subdirac {

namespace {

Mat4 corson(const GammaRep& rep, int s5, int s03, int s12) {
  const Backend b = rep.backend();
  const Mat4 one = Mat4::identity(b);
  const Scalar i = Scalar::imag_unit(b);
  const Mat4 g03 = rep.gamma[0] * rep.gamma[3];
  const Mat4 ig12 = i * (rep.gamma[1] * rep.gamma[2]);
  Mat4 sum = Scalar::integer(3, b) * one;
  sum += Scalar::integer(s5, b) * rep.gamma5;
  sum += Scalar::integer(s03, b) * g03;
  sum += Scalar::integer(s12, b) * ig12;
  return sum * Scalar::rational(1, 4).to(b);
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

ProjectorSet ProjectorSet::promoted() const {
  ProjectorSet s{shared_rep(rep->name, Backend::floating), q_plus.promoted(), q_minus.promoted(),
                 {}, v.promoted()};
  for (std::size_t k = 0; k < 4; ++k) s.p[k] = p[k].promoted();
  return s;
}

ResidualReport projector_algebra_residuals(const ProjectorSet& s) {
  const Backend b = s.backend();
  const Mat4 one = Mat4::identity(b);
  ResidualReport r;
  r.add("Q+^2-Q+", Equation::chiral_projectors, Residual::of(s.q_plus * s.q_plus - s.q_plus));
  r.add("Q-^2-Q-", Equation::chiral_projectors, Residual::of(s.q_minus * s.q_minus - s.q_minus));
  r.add("Q++Q--I", Equation::chiral_projectors, Residual::of(s.q_plus + s.q_minus - one));
  r.add("Q+Q-", Equation::chiral_projectors, Residual::of(s.q_plus * s.q_minus));

  Mat4 total(b);
  for (int i = 1; i <= 4; ++i) {
    const Mat4& pi = s.P(i);
    total += pi;
    r.add("P" + idx(i) + "^2-P" + idx(i), Equation::projectors, Residual::of(pi * pi - pi));
    r.add("tr(P" + idx(i) + ")-3", Equation::projectors,
          Residual::of(Vector<1>{pi.trace() - Scalar::integer(3, b)}));
    r.add("[P" + idx(i) + ",g5]", Equation::projectors,
          Residual::of(commutator(pi, s.rep->gamma5)));
    for (int j = i + 1; j <= 4; ++j) {
      r.add("[P" + idx(i) + ",P" + idx(j) + "]", Equation::projectors,
            Residual::of(commutator(pi, s.P(j))));
    }
  }
  r.add("sum(P)-3I", Equation::projectors, Residual::of(total - Scalar::integer(3, b) * one));
  return r;
}

ProjectorSet build_projectors(std::shared_ptr<const GammaRep> rep) {
  const Backend b = rep->backend();
  const Mat4 one = Mat4::identity(b);
  const Scalar half = Scalar::rational(1, 2).to(b);
  ProjectorSet s{rep,
                 (one + rep->gamma5) * half,
                 (one - rep->gamma5) * half,
                 {corson(*rep, -1, -1, +1), corson(*rep, -1, +1, -1), corson(*rep, +1, +1, +1),
                  corson(*rep, +1, -1, -1)},
                 Scalar::imag_unit(b) * (rep->gamma[2] * rep->gamma[3])};
  if (!projector_algebra_residuals(s).passes(1e-12)) {
    throw Error("projector-algebra-violation", to_string(rep->name));
  }
  return s;
}

ProjectorSet build_projectors(RepName name, Backend b) {
  return build_projectors(shared_rep(name, b));
}

Mat4 corson_complement(const ProjectorSet& set, int i) {
  if (i < 1 || i > 4) throw Error("index-out-of-range", "corson index " + idx(i));
  return Mat4::identity(set.backend()) - set.P(i);
}

ResidualReport v_swap_check(const ProjectorSet& s, const Mat4& v) {
  const Mat4 v_inv = v.adjoint();
  ResidualReport r;
  r.add("VP1V^-1-P2", Equation::v_symmetry, Residual::of(v * s.P(1) * v_inv - s.P(2)));
  r.add("VP2V^-1-P1", Equation::v_symmetry, Residual::of(v * s.P(2) * v_inv - s.P(1)));
  r.add("[V,g0]", Equation::v_symmetry, Residual::of(commutator(v, s.rep->gamma[0])));
  r.add("[V,g1]", Equation::v_symmetry, Residual::of(commutator(v, s.rep->gamma[1])));
  r.add("VV^dag-I", Equation::v_symmetry,
        Residual::of(v * v.adjoint() - Mat4::identity(s.backend())));
  return r;
}

const ProjectorSet& shared_projectors(RepName name, Backend b) {
  static std::mutex mutex;
  static std::map<std::pair<RepName, Backend>, std::unique_ptr<const ProjectorSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{name, b}];
  if (!slot) slot = std::make_unique<const ProjectorSet>(build_projectors(name, b));
  return *slot;
}

}  // namespace subdirac
