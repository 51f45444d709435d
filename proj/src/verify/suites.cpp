#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "subdirac/error.hpp"
#include "subdirac/lorentz.hpp"
#include "subdirac/projector.hpp"
#include "subdirac/subsolution.hpp"
#include "subdirac/verify.hpp"

namespace subdirac::verify {

namespace {

constexpr Backend kE = Backend::exact;
constexpr Backend kF = Backend::floating;
constexpr double kControlFloor = 1e-3;
constexpr double kGeneratorControlFloor = 0.1;
constexpr double kWeylTol = 1e-12;

// Independent random streams per fuzz campaign.
enum Stream : std::uint64_t { split_stream = 1, weyl_stream, majorana_stream, covariance_stream };

Residual of_scalar(const Scalar& s) {
  return s.is_exact() ? Residual::exact(s.is_zero(), s.abs()) : Residual::floating(s.abs());
}

template <std::size_t R, std::size_t C>
Residual operator_difference(const MomentumOperator<R, C>& a, const MomentumOperator<R, C>& b) {
  double worst = (a.mass_coefficient() - b.mass_coefficient()).max_abs();
  for (int mu = 0; mu < 4; ++mu) {
    worst = std::max(worst, (a.p_coefficient(mu) - b.p_coefficient(mu)).max_abs());
  }
  return Residual::exact(worst == 0.0, worst);
}

std::string rep_tag(RepName r) { return to_string(r); }

class Collector {
 public:
  explicit Collector(double tol) : tol_(tol) {}

  void add(const std::string& id, Equation eq, Residual r, Expect expect = Expect::vanish,
           std::optional<double> pinned = std::nullopt) {
    push(id, ResidualEntry{"", eq, r, expect, pinned});
  }

  void add_report(const std::string& prefix, const ResidualReport& report,
                  std::optional<Backend> only = std::nullopt) {
    for (const auto& e : report.entries) {
      if (only && e.residual.backend != *only) continue;
      push(prefix + "/" + e.name, e);
    }
  }

  /// Negative control on a magnitude with its own floor.
  void add_control(const std::string& id, Equation eq, double magnitude, double floor) {
    records_.push_back({id, std::string(equation_tag(eq)), kF, magnitude, false, magnitude > floor});
  }

  /// Passes when `fn` throws Error with `code`.
  void add_expected_error(const std::string& id, Equation eq, const std::string& code,
                          const std::function<void()>& fn) {
    bool pass = false;
    try {
      fn();
    } catch (const Error& e) {
      pass = e.code() == code;
    }
    records_.push_back({id, std::string(equation_tag(eq)), kE, std::nullopt, false, pass});
  }

  /// Aggregates fuzz entries by id: worst magnitude, pass only if every trial passes.
  void fold(const std::string& prefix, const ResidualReport& report,
            std::optional<double> pinned = std::nullopt) {
    for (const auto& e : report.entries) {
      ResidualEntry entry = e;
      if (pinned && entry.expect == Expect::vanish) entry.pinned_tol = pinned;
      const std::string id = prefix + "/" + e.name;
      const bool pass = entry.passes(tol_, kControlFloor);
      auto [it, fresh] = fold_index_.try_emplace(id, folded_.size());
      if (fresh) {
        folded_.push_back({id, std::string(equation_tag(e.equation)), e.residual.backend,
                           e.residual.magnitude, false, pass});
        folded_expect_.push_back(e.expect);
        continue;
      }
      CheckRecord& rec = folded_[it->second];
      const double m = e.residual.magnitude;
      rec.residual = folded_expect_[it->second] == Expect::vanish ? std::max(*rec.residual, m)
                                                                  : std::min(*rec.residual, m);
      rec.pass = rec.pass && pass;
    }
  }

  /// A fuzz trial that threw; recorded as one failing aggregate.
  void fold_failure(const std::string& prefix, const Error& e) {
    ResidualReport r;
    r.add(std::string("trial-error:") + e.code(), Equation::dirac, Residual::floating(INFINITY));
    fold(prefix, r);
  }

  void flush() {
    records_.insert(records_.end(), folded_.begin(), folded_.end());
    folded_.clear();
    folded_expect_.clear();
    fold_index_.clear();
  }

  std::vector<CheckRecord> take() {
    flush();
    return std::move(records_);
  }

 private:
  void push(const std::string& id, const ResidualEntry& e) {
    const bool exact_zero = e.residual.backend == kE && e.residual.exact_zero;
    std::optional<double> residual;
    if (!exact_zero) residual = e.residual.magnitude;
    records_.push_back({id, std::string(equation_tag(e.equation)), e.residual.backend, residual,
                        exact_zero, e.passes(tol_, kControlFloor)});
  }

  double tol_;
  std::vector<CheckRecord> records_;
  std::vector<CheckRecord> folded_;
  std::vector<Expect> folded_expect_;
  std::map<std::string, std::size_t> fold_index_;
};

std::array<LorentzParams, 12> transform_grid() {
  std::array<LorentzParams, 12> grid;
  std::size_t k = 0;
  for (double w : {0.5, -0.5, 1.0, -1.0, 3.0, -3.0}) {
    grid[k++] = LorentzParams::boost(3, w);
    grid[k++] = LorentzParams::rotation(1, 2, w);
  }
  return grid;
}

// ---------------------------------------------------------------- clifford

void clifford_exact(Collector& c) {
  for (RepName name : kAllReps) {
    const auto rep = shared_rep(name, kE);
    const std::string pre = "clifford/" + rep_tag(name);
    for (const auto& cr : clifford_residual(*rep)) {
      c.add(pre + "/{" + std::to_string(cr.mu) + "," + std::to_string(cr.nu) + "}",
            Equation::clifford, Residual::of(cr.residual));
    }
    const Mat4 one = Mat4::identity(kE);
    c.add(pre + "/gamma5^2-I", Equation::gamma5, Residual::of(rep->gamma5 * rep->gamma5 - one));
    c.add(pre + "/gamma5-product", Equation::gamma5,
          Residual::of(rep->gamma5 - gamma5_of(rep->gamma)));
    for (int mu = 0; mu < 4; ++mu) {
      c.add(pre + "/{gamma5,gamma" + std::to_string(mu) + "}", Equation::gamma5,
            Residual::of(anticommutator(rep->gamma5, rep->gamma[mu])));
    }
    if (name != RepName::spinor) {
      const Intertwiner u = intertwiner(RepName::spinor, name);
      const auto spinor = shared_rep(RepName::spinor, kE);
      for (int mu = 0; mu < 4; ++mu) {
        c.add(pre + "/U gamma" + std::to_string(mu) + " U^dag", Equation::intertwiner,
              Residual::of(u.conjugate(spinor->gamma[mu]) - rep->gamma[mu]));
      }
      c.add(pre + "/U gamma5 U^dag", Equation::intertwiner,
            Residual::of(u.conjugate(spinor->gamma5) - rep->gamma5));
      const Mat4 t = u.scaled();
      c.add(pre + "/U U^dag-I", Equation::intertwiner,
            Residual::of(t * t.adjoint() - Scalar::exact(u.norm_sq()) * one));
    }
  }

  const auto spinor = shared_rep(RepName::spinor, kE);
  const Mat4 pinned_g5 =
      Mat4::diagonal({Scalar::exact(-1), Scalar::exact(-1), Scalar::exact(1), Scalar::exact(1)});
  c.add("clifford/spinor/gamma5-diag(-1,-1,1,1)", Equation::gamma5,
        Residual::of(spinor->gamma5 - pinned_g5));
  c.add("clifford/spinor/Dirac2-coefficients", Equation::dirac_spinor_components,
        operator_difference(dirac_operator(*spinor), systems::dirac_components()));

  // Flipping the sign of the sigma^3 block in the lower-left of gamma^3 only.
  std::array<Mat4, 4> tampered = spinor->gamma;
  for (std::size_t i = 2; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) tampered[3].set(i, j, -tampered[3](i, j));
  }
  for (const auto& cr : clifford_residual(tampered)) {
    if (cr.mu == 0 && cr.nu == 3) {
      c.add("control/clifford/tampered-gamma3/{0,3}", Equation::clifford,
            Residual::of(cr.residual), Expect::nonzero);
    }
  }
}

void clifford_float(Collector& c) {
  for (RepName name : kAllReps) {
    double worst = 0.0;
    for (const auto& cr : clifford_residual(*shared_rep(name, kF))) {
      worst = std::max(worst, cr.residual.max_abs());
    }
    c.add("clifford/" + rep_tag(name) + "/promoted", Equation::clifford,
          Residual::floating(worst));
  }
}

// -------------------------------------------------------------- projectors

void projectors_exact(Collector& c) {
  for (RepName name : kAllReps) {
    const ProjectorSet& ps = shared_projectors(name, kE);
    const std::string pre = "projectors/" + rep_tag(name);
    c.add_report(pre, projector_algebra_residuals(ps));
    c.add_report("vswap/" + rep_tag(name), v_swap_check(ps));
    for (int i = 1; i <= 4; ++i) {
      const Mat4 eps = corson_complement(ps, i);
      const std::string e = pre + "/epsilon" + std::to_string(i);
      c.add(e + "^2-epsilon", Equation::corson_complement, Residual::of(eps * eps - eps));
      c.add(e + " trace-1", Equation::corson_complement,
            of_scalar(eps.trace() - Scalar::exact(1)));
      c.add(e + " P" + std::to_string(i), Equation::corson_complement,
            Residual::of(eps * ps.P(i)));
    }
    if (name != RepName::spinor) {
      const Intertwiner u = intertwiner(RepName::spinor, name);
      const ProjectorSet& base = shared_projectors(RepName::spinor, kE);
      for (int i = 1; i <= 4; ++i) {
        c.add(pre + "/U P" + std::to_string(i) + " U^dag", Equation::intertwiner,
              Residual::of(u.conjugate(base.P(i)) - ps.P(i)));
      }
      c.add(pre + "/U V U^dag", Equation::intertwiner, Residual::of(u.conjugate(base.v) - ps.v));
    }
    const ResidualReport with_identity = v_swap_check(ps, Mat4::identity(kE));
    for (const char* key : {"VP1V^-1-P2", "VP2V^-1-P1"}) {
      c.add("control/vswap/" + rep_tag(name) + "/V=I/" + key, Equation::v_symmetry,
            with_identity.at(key).residual, Expect::nonzero);
    }
  }

  const ProjectorSet& ps = shared_projectors(RepName::spinor, kE);
  const auto diag = [](long a, long b, long c2, long d) {
    return Mat4::diagonal({Scalar::exact(a), Scalar::exact(b), Scalar::exact(c2), Scalar::exact(d)});
  };
  c.add("projectors/spinor/P1-diag(1,1,1,0)", Equation::projectors,
        Residual::of(ps.P(1) - diag(1, 1, 1, 0)));
  c.add("projectors/spinor/P2-diag(1,1,0,1)", Equation::projectors,
        Residual::of(ps.P(2) - diag(1, 1, 0, 1)));
  c.add("projectors/spinor/P3-diag(1,0,1,1)", Equation::projectors,
        Residual::of(ps.P(3) - diag(1, 0, 1, 1)));
  c.add("projectors/spinor/P4-diag(0,1,1,1)", Equation::projectors,
        Residual::of(ps.P(4) - diag(0, 1, 1, 1)));
  c.add("projectors/spinor/Q--diag(1,1,0,0)", Equation::chiral_projectors,
        Residual::of(ps.q_minus - diag(1, 1, 0, 0)));
}

void projectors_float(Collector& c) {
  for (RepName name : kAllReps) {
    const ProjectorSet& ps = shared_projectors(name, kF);
    c.add("projectors/" + rep_tag(name) + "/promoted", Equation::projectors,
          Residual::floating(projector_algebra_residuals(ps).max_residual()));
    c.add("vswap/" + rep_tag(name) + "/promoted", Equation::v_symmetry,
          Residual::floating(v_swap_check(ps).max_residual()));
  }
}

// ------------------------------------------------------------------- split

BispinorField solution(const FourMomentum& p, RepName rep, int label) {
  return BispinorField::single(u_spinor(p, rep, label), shared_rep(rep, p.backend()));
}

void add_split_reports(Collector& c, const std::string& pre, const SplitResult& sr,
                       bool with_obstruction = true) {
  c.add_report(pre, recombination_residuals(sr));
  c.add_report(pre, identity_residuals(sr));
  c.add_report(pre, constituent_residuals(sr));
  if (with_obstruction) c.add_report(pre, chirality_obstruction(sr));
}

void split_exact(Collector& c, const RunConfig& cfg) {
  const FourMomentum witness = FourMomentum::exact(3, 2, 2, 0, 1);
  const Scalar one = Scalar::exact(1);
  for (int label : {1, 2}) {
    const BispinorField psi = transport(solution(witness, cfg.rep, label), RepName::spinor);
    add_split_reports(c, "split/witness/s" + std::to_string(label), split(psi, one));
  }
  const BispinorField rest = solution(FourMomentum::exact(1, 0, 0, 0, 1), RepName::spinor, 1);
  // At rest P2 Psi_(2) vanishes, so the obstruction control has nothing to detect.
  add_split_reports(c, "split/rest/s1", split(rest, one), false);

  // Witness amplitude placed on p = (3,2,2,1), m = 1, where p.p - m^2 = -1.
  const BispinorField on_shell = solution(witness, RepName::spinor, 1);
  const FourMomentum off = FourMomentum::exact(3, 2, 2, 1, 1);
  const BispinorField off_field = BispinorField::single(
      {on_shell.terms().front().amplitude, off, +1}, on_shell.rep(), MomentumCheck::unchecked);
  c.add("control/off-shell/Dirac1", Equation::dirac,
        Residual::of(dirac_residual(off_field, one)), Expect::nonzero);
  const SplitResult forced = split(off_field, one, {.check_solution = false});
  c.add("control/off-shell/constituent1", Equation::constituent1,
        constituent_residuals(forced).at("constituent1").residual, Expect::nonzero);
  c.add_expected_error("control/off-shell/not-a-solution", Equation::dirac, "not-a-solution",
                       [&] { split(off_field, one); });
  c.add_expected_error("control/split/m=0", Equation::split_definitions, "split-requires-mass",
                       [&] { split(on_shell, Scalar::exact(0)); });

  // A split whose xi_(1) is shifted by (0, 1) off its definition.
  SplitResult tampered = split(on_shell, one);
  const SpinorField shift = SpinorField::single(
      {Vector<2>{Scalar::exact(0), Scalar::exact(1)}, witness, +1}, nullptr);
  tampered.xi1 = tampered.xi1 + shift;
  tampered.psi1 = stack(tampered.xi1, lower(on_shell), on_shell.rep());
  c.add("control/tampered-split/id1", Equation::id1,
        identity_residuals(tampered).at("id1").residual, Expect::nonzero);
  c.add("control/tampered-split/constituent1", Equation::constituent1,
        constituent_residuals(tampered).at("constituent1").residual, Expect::nonzero);
}

FourMomentum fuzz_momentum(const RunConfig& cfg, Stream stream, long trial, bool massless) {
  const MomentumSample s = sample_momentum(cfg, stream, static_cast<std::uint64_t>(trial), massless);
  return FourMomentum::on_shell(s.mass, s.p1, s.p2, s.p3);
}

void split_float(Collector& c, const RunConfig& cfg) {
  const SplitOptions options{.check_solution = true, .tol = cfg.tol};
  for (long t = 0; t < cfg.trials; ++t) {
    const FourMomentum p = fuzz_momentum(cfg, split_stream, t, false);
    for (int label : {1, 2}) {
      try {
        const BispinorField psi = transport(solution(p, cfg.rep, label), RepName::spinor);
        const SplitResult sr = split(psi, p.mass(), options);
        c.fold("split/fuzz", recombination_residuals(sr));
        c.fold("split/fuzz", identity_residuals(sr));
        c.fold("split/fuzz", constituent_residuals(sr));
      } catch (const Error& e) {
        c.fold_failure("split/fuzz", e);
      }
    }
  }
  c.flush();
}

// -------------------------------------------------------------------- weyl

BispinorField weyl_field(const FourMomentum& p, RepName rep, Chirality chirality) {
  return BispinorField::single(weyl_spinor(p, rep, chirality), shared_rep(rep, p.backend()));
}

void weyl_exact(Collector& c, const RunConfig& cfg) {
  const ProjectorSet& ps = shared_projectors(cfg.rep, kE);
  const std::array<FourMomentum, 3> momenta{FourMomentum::exact(1, 0, 0, 1, 0),
                                            FourMomentum::exact(5, 0, 3, 4, 0),
                                            FourMomentum::exact(5, 3, 0, -4, 0)};
  for (std::size_t k = 0; k < momenta.size(); ++k) {
    const std::string pre = "weyl/witness" + std::to_string(k + 1);
    const BispinorField left = weyl_field(momenta[k], cfg.rep, Chirality::left);
    const BispinorField right = weyl_field(momenta[k], cfg.rep, Chirality::right);
    c.add_report(pre + "/left", weyl_residuals(left));
    c.add_report(pre + "/right", weyl_residuals(right));
    c.add(pre + "/left Q+Psi-Psi", Equation::chiral_projectors,
          Residual::of(ps.q_plus * left - left));
    c.add(pre + "/right Q-Psi-Psi", Equation::chiral_projectors,
          Residual::of(ps.q_minus * right - right));
  }

  const BispinorField massive = solution(FourMomentum::exact(3, 2, 2, 0, 1), cfg.rep, 1);
  const ResidualReport r = weyl_residuals(massive, false);
  c.add("control/weyl/massive/Weyl1", Equation::weyl1, r.at("Weyl1").residual, Expect::nonzero);
  c.add("control/weyl/massive/Weyl2", Equation::weyl2, r.at("Weyl2").residual, Expect::nonzero);
  c.add_expected_error("control/weyl/massive", Equation::weyl1, "weyl-requires-massless",
                       [&] { weyl_residuals(massive); });
}

void weyl_float(Collector& c, const RunConfig& cfg) {
  const long n = std::max(1L, cfg.trials / 10);
  for (long t = 0; t < n; ++t) {
    const FourMomentum p = fuzz_momentum(cfg, weyl_stream, t, true);
    for (Chirality ch : {Chirality::left, Chirality::right}) {
      try {
        c.fold(ch == Chirality::left ? "weyl/fuzz/left" : "weyl/fuzz/right",
               weyl_residuals(weyl_field(p, cfg.rep, ch)), kWeylTol);
      } catch (const Error& e) {
        c.fold_failure("weyl/fuzz", e);
      }
    }
  }
  c.flush();
}

// ---------------------------------------------------------------- majorana

void majorana_exact(Collector& c, const RunConfig& cfg) {
  const FourMomentum witness = FourMomentum::exact(3, 2, 2, 0, 1);
  for (int label : {1, 2}) {
    const std::string pre = "majorana/witness/s" + std::to_string(label);
    const BispinorField psi = solution(witness, cfg.rep, label);
    const BispinorField m = majorana_build(psi);
    c.add_report(pre, majorana_residuals(m, Scalar::exact(1)));
    c.add(pre + "/C(CPsi)-Psi", Equation::charge_conjugation,
          Residual::of(charge_conjugate(charge_conjugate(psi)) - psi));
    c.add(pre + "/Dirac(CPsi)", Equation::charge_conjugation,
          Residual::of(dirac_residual(charge_conjugate(psi), Scalar::exact(1))));
  }
  const BispinorField plain = solution(witness, cfg.rep, 1);
  c.add_expected_error("control/majorana/positive-frequency", Equation::majorana_condition,
                       "not-majorana", [&] { majorana_residuals(plain, Scalar::exact(1)); });
}

void majorana_float(Collector& c, const RunConfig& cfg) {
  for (long t = 0; t < cfg.trials; ++t) {
    const FourMomentum p = fuzz_momentum(cfg, majorana_stream, t, false);
    try {
      const BispinorField m = majorana_build(solution(p, cfg.rep, 1 + static_cast<int>(t % 2)), cfg.tol);
      c.fold("majorana/fuzz", majorana_residuals(m, p.mass(), cfg.tol));
    } catch (const Error& e) {
      c.fold_failure("majorana/fuzz", e);
    }
  }
  c.flush();
}

// -------------------------------------------------------------- covariance

void covariance_exact(Collector& c, const RunConfig& cfg) {
  c.add_report("pi/" + rep_tag(cfg.rep), pi_commutation_check(cfg.rep, {}), kE);
  c.add_report("vframe/" + rep_tag(cfg.rep), v_special_frame_check(cfg.rep, kE));
}

void covariance_float(Collector& c, const RunConfig& cfg) {
  const std::string pre = "covariance/" + rep_tag(cfg.rep);
  const auto grid = transform_grid();
  for (const auto& params : grid) {
    c.add_report(pre, covariance_check(params, cfg.rep));
  }
  for (const auto& params : {LorentzParams::boost(1, 1.0), LorentzParams::boost(2, 1.0),
                             LorentzParams::rotation(1, 3, 1.0), LorentzParams::rotation(2, 3, 1.0)}) {
    c.add_report(pre, covariance_check(params, cfg.rep));
  }
  double defect = 0.0;
  for (const auto& params : grid) defect = std::max(defect, vector_transform(params).metric_defect);
  c.add("covariance/metric-defect", Equation::pconditions, Residual::floating(defect),
        Expect::vanish, 1e-12);

  std::vector<double> omegas{0.5, -0.5, 1.0, -1.0, 3.0, -3.0, 1.3};
  c.add_report("pi/" + rep_tag(cfg.rep), pi_commutation_check(cfg.rep, omegas), kF);
  c.add_report("vframe/" + rep_tag(cfg.rep), v_special_frame_check(cfg.rep, kF));

  for (const auto& params : {LorentzParams::boost(3, 1.0), LorentzParams::rotation(1, 2, 1.0)}) {
    const double r = covariance_check(params, cfg.rep, -1).max_residual();
    c.add_control("control/covariance/flipped-I/" + std::to_string(params.mu) +
                      std::to_string(params.nu),
                  Equation::pconditions, r, kGeneratorControlFloor);
  }

  for (long t = 0; t < cfg.trials; ++t) {
    const FourMomentum p = fuzz_momentum(cfg, covariance_stream, t, false);
    const LorentzParams& params = grid[static_cast<std::size_t>(t) % grid.size()];
    try {
      const BispinorField psi = solution(p, cfg.rep, 1 + static_cast<int>(t % 2));
      ResidualReport moved;
      moved.add("Dirac(S Psi)[" + rep_tag(cfg.rep) + "]", Equation::dirac,
                Residual::of(dirac_residual(transform_field(psi, params), p.mass())));
      c.fold("covariance/fuzz", moved);
      const SplitResult sr = split(transport(psi, RepName::spinor), p.mass(),
                                   {.check_solution = true, .tol = cfg.tol});
      c.fold("covariance/fuzz", transformed_split_residuals(sr, params));
      c.fold("special-frame/fuzz", special_frame_residuals(sr));
    } catch (const Error& e) {
      c.fold_failure("covariance/fuzz", e);
    }
  }
  c.flush();
}

bool selected(Suite chosen, Suite s) { return chosen == Suite::all || chosen == s; }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + trial);
}

MomentumSample sample_momentum(const RunConfig& c, std::uint64_t stream, std::uint64_t trial,
                               bool massless) {
  std::mt19937_64 rng(trial_seed(c.seed, stream, trial));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto lerp = [&](std::pair<double, double> r) {
    return r.first + (r.second - r.first) * unit(rng);
  };
  const double mass = massless ? 0.0 : lerp(c.mass_range);
  // A massless momentum needs |p| > 0.
  auto range = c.momentum_range;
  if (massless) range = {std::max(range.first, 1e-2), std::max(range.second, 1e-2)};
  const double magnitude = lerp(range);
  const double z = 2.0 * unit(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {mass, magnitude * s * std::cos(phi), magnitude * s * std::sin(phi), magnitude * z};
}

Report run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Collector c(config.tol);
  const Suite s = config.suite;

  if (config.runs_exact()) {
    if (selected(s, Suite::clifford)) clifford_exact(c);
    if (selected(s, Suite::projectors)) projectors_exact(c);
    if (selected(s, Suite::split)) split_exact(c, config);
    if (selected(s, Suite::weyl)) weyl_exact(c, config);
    if (selected(s, Suite::majorana)) majorana_exact(c, config);
    if (selected(s, Suite::covariance)) covariance_exact(c, config);
  }
  if (config.runs_float()) {
    if (selected(s, Suite::clifford)) clifford_float(c);
    if (selected(s, Suite::projectors)) projectors_float(c);
    if (selected(s, Suite::split)) split_float(c, config);
    if (selected(s, Suite::weyl)) weyl_float(c, config);
    if (selected(s, Suite::majorana)) majorana_float(c, config);
    if (selected(s, Suite::covariance)) covariance_float(c, config);
  }

  Report r{config, c.take(), 0.0};
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace subdirac::verify
