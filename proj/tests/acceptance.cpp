// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "subdirac/verify.hpp"

using namespace subdirac;
using namespace subdirac::verify;

namespace {

using Records = std::vector<CheckRecord>;

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }
bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

Records select(const Report& r, const std::function<bool(const CheckRecord&)>& keep) {
  Records out;
  std::copy_if(r.checks.begin(), r.checks.end(), std::back_inserter(out), keep);
  return out;
}

Records with_prefix(const Report& r, const std::string& prefix) {
  return select(r, [&](const CheckRecord& c) { return starts_with(c.id, prefix); });
}

double value(const CheckRecord& c) { return c.exact_zero ? 0.0 : c.residual.value_or(1.0 / 0.0); }

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

void all_exact_zero(Outcome& o, const Records& rs, const std::string& what) {
  o.require(!rs.empty(), "no records for " + what);
  for (const auto& c : rs) o.require(c.backend == Backend::exact && c.exact_zero, c.id + " not exactly zero");
}

Records exact_only(Records rs) {
  std::erase_if(rs, [](const CheckRecord& c) { return c.backend != Backend::exact; });
  return rs;
}

void all_below(Outcome& o, const Records& rs, double tol, const std::string& what) {
  o.require(!rs.empty(), "no records for " + what);
  for (const auto& c : rs) o.require(c.pass && value(c) < tol, c.id + " above tolerance");
}

void covers(Outcome& o, const Records& rs, const std::vector<std::string>& eqs, const std::string& what) {
  std::set<std::string> seen;
  for (const auto& c : rs) seen.insert(c.paper_eq);
  for (const auto& e : eqs) o.require(seen.count(e) == 1, what + " lacks " + e);
}

const std::vector<std::string> kSplitEqs{"def3",           "def4",           "id1",
                                         "id2",            "constituent1",   "constituent2",
                                         "constituent1/4", "constituent2/4", "constituent1/P",
                                         "constituent2/P", "constituents/3", "identities",
                                         "psi"};

Outcome structural(const Report& r) {
  Outcome o;
  for (const char* rep : {"spinor", "standard", "majorana"}) {
    const std::string name(rep);
    all_exact_zero(o, exact_only(with_prefix(r, "clifford/" + name + "/")), "clifford/" + name);
    all_exact_zero(o, exact_only(with_prefix(r, "projectors/" + name + "/")), "projectors/" + name);
    all_exact_zero(o, exact_only(with_prefix(r, "vswap/" + name + "/")), "vswap/" + name);
    const Records cl = with_prefix(r, "clifford/" + name + "/{");
    o.require(std::count_if(cl.begin(), cl.end(), [](const CheckRecord& c) { return c.id.find("gamma5") == std::string::npos; }) == 10,
              name + ": expected 10 Clifford residuals");
  }
  return o;
}

Outcome pinning(const Report& r) {
  Outcome o;
  for (const char* id : {"projectors/spinor/P1-diag(1,1,1,0)", "projectors/spinor/P2-diag(1,1,0,1)",
                         "projectors/spinor/Q--diag(1,1,0,0)"}) {
    all_exact_zero(o, select(r, [&](const CheckRecord& c) { return c.id == id; }), id);
  }
  return o;
}

Outcome witness(const Report& r) {
  Outcome o;
  for (const char* label : {"split/witness/s1/", "split/witness/s2/"}) {
    // The non-chiral gamma.p P_k Psi_(k) entries are nonzero by design.
    const Records rs = select(r, [&](const CheckRecord& c) {
      return starts_with(c.id, label) && c.paper_eq != "CONSTITUENTS4-nonchiral";
    });
    all_exact_zero(o, rs, label);
    covers(o, rs, kSplitEqs, label);
  }
  return o;
}

Outcome fuzz(const Report& r) {
  Outcome o;
  o.require(r.config.trials == 1000, "expected 1000 trials");
  const Records rs = with_prefix(r, "split/fuzz/");
  all_below(o, rs, 1e-10, "split/fuzz");
  covers(o, rs, kSplitEqs, "split/fuzz");
  return o;
}

Outcome covariance(const Report& r) {
  Outcome o;
  const Records cov = select(r, [](const CheckRecord& c) {
    return starts_with(c.id, "covariance/") || starts_with(c.id, "special-frame/") ||
           (starts_with(c.id, "pi/") && !contains(c.id, "[S01"));
  });
  all_below(o, cov, 1e-10, "covariance");
  const Records pinned = select(r, [](const CheckRecord& c) {
    return (starts_with(c.id, "pi/") && (contains(c.id, "[S03") || contains(c.id, "[S12"))) ||
           contains(c.id, "mass drift");
  });
  all_below(o, pinned, 1e-12, "[S,P] and mass drift");
  o.require(!with_prefix(r, "covariance/fuzz/").empty(), "no transformed solutions");
  o.require(!with_prefix(r, "special-frame/fuzz/").empty(), "no special frame fuzz");
  return o;
}

Outcome weyl_majorana(const Report& r) {
  Outcome o;
  o.require(std::max(1L, r.config.trials / 10) == 100, "expected 100 massless momenta");
  all_exact_zero(o, with_prefix(r, "weyl/witness"), "weyl/witness");
  all_below(o, with_prefix(r, "weyl/fuzz/"), 1e-12, "weyl/fuzz");
  all_exact_zero(o, with_prefix(r, "majorana/witness/"), "majorana/witness");
  all_below(o, with_prefix(r, "majorana/fuzz/"), 1e-10, "majorana/fuzz");
  return o;
}

Outcome controls(const Report& r) {
  Outcome o;
  const auto one = [&](const std::string& id) {
    const Records rs = select(r, [&](const CheckRecord& c) { return c.id == id; });
    o.require(rs.size() == 1, "missing control " + id);
    return rs.empty() ? CheckRecord{} : rs.front();
  };
  const CheckRecord off = one("control/off-shell/Dirac1");
  o.require(off.pass && value(off) > 1e-3, "off-shell control silent");
  o.require(one("control/split/m=0").pass, "m=0 split did not raise split-requires-mass");
  const Records flipped = with_prefix(r, "control/covariance/flipped-I");
  o.require(!flipped.empty(), "missing flipped-I control");
  for (const auto& c : flipped) o.require(c.pass && value(c) > 0.1, c.id + " silent");
  const Records vi = with_prefix(r, "control/vswap/");
  o.require(vi.size() == 6, "missing V=I controls");
  for (const auto& c : vi) o.require(c.pass && value(c) > 0.0, c.id + " silent");
  const CheckRecord s01 = one("pi/spinor/[S01(1),P1]");
  o.require(s01.pass && value(s01) > 0.0, "(0,1) boost commutes with P1");
  return o;
}

Outcome determinism(const Report& first, const RunConfig& cfg) {
  Outcome o;
  Json a = to_json(first);
  Json b = to_json(run(cfg));
  a.erase("wall_ms");
  b.erase("wall_ms");
  o.require(a.dump() == b.dump(), "reports differ");
  return o;
}

}  // namespace

int main() {
  RunConfig cfg;
  cfg.suite = Suite::all;
  cfg.backend = BackendChoice::both;
  cfg.trials = 1000;
  const Report report = run(cfg);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 exact structural suite", [&] { return structural(report); }},
      {"2 spinor-rep projector pins", [&] { return pinning(report); }},
      {"3 exact split witness", [&] { return witness(report); }},
      {"4 float split fuzz < 1e-10", [&] { return fuzz(report); }},
      {"5 covariance", [&] { return covariance(report); }},
      {"6 weyl and majorana", [&] { return weyl_majorana(report); }},
      {"7 negative controls fire", [&] { return controls(report); }},
      {"8 determinism modulo wall_ms", [&] { return determinism(report, cfg); }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const Outcome o = check();
    std::printf("%s  criterion %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.ok ? "" : ": ",
                o.why.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("report: %ld passed, %ld failed, %.0f ms\n", report.passed(), report.failed(), report.wall_ms);
  return failures == 0 && report.ok() ? 0 : 1;
}
