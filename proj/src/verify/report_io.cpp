#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "subdirac/error.hpp"
#include "subdirac/verify.hpp"

namespace subdirac::verify {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::clifford: return "clifford";
    case Suite::projectors: return "projectors";
    case Suite::split: return "split";
    case Suite::weyl: return "weyl";
    case Suite::majorana: return "majorana";
    case Suite::covariance: return "covariance";
    case Suite::all: return "all";
  }
  return "?";
}

std::string to_string(BackendChoice b) {
  switch (b) {
    case BackendChoice::exact: return "exact";
    case BackendChoice::floating: return "float";
    case BackendChoice::both: return "both";
  }
  return "?";
}

Suite suite_from_string(const std::string& s) {
  for (Suite v : {Suite::clifford, Suite::projectors, Suite::split, Suite::weyl, Suite::majorana,
                  Suite::covariance, Suite::all}) {
    if (to_string(v) == s) return v;
  }
  throw Error("usage", "unknown suite '" + s + "'");
}

BackendChoice backend_choice_from_string(const std::string& s) {
  for (BackendChoice v : {BackendChoice::exact, BackendChoice::floating, BackendChoice::both}) {
    if (to_string(v) == s) return v;
  }
  throw Error("usage", "unknown backend '" + s + "'");
}

void RunConfig::validate() const {
  const auto bad = [](const std::string& what) { throw Error("usage", what); };
  if (!(tol > 0.0) || !std::isfinite(tol)) bad("tol must be a positive number");
  if (trials < 1) bad("trials must be at least 1");
  const auto [m0, m1] = mass_range;
  if (!(m0 > 0.0) || !(m0 <= m1) || !std::isfinite(m1)) bad("mass range must satisfy 0 < min <= max");
  const auto [k0, k1] = momentum_range;
  if (!(k0 >= 0.0) || !(k0 <= k1) || !std::isfinite(k1)) {
    bad("momentum range must satisfy 0 <= min <= max");
  }
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["suite"] = to_string(c.suite);
  j["rep"] = to_string(c.rep);
  j["backend"] = to_string(c.backend);
  j["tol"] = c.tol;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["mass_range"] = {c.mass_range.first, c.mass_range.second};
  j["momentum_range"] = {c.momentum_range.first, c.momentum_range.second};
  return j;
}

RunConfig config_from_json(const Json& j, RunConfig c) {
  if (!j.is_object()) throw Error("usage", "config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "suite") {
        c.suite = suite_from_string(value.get<std::string>());
      } else if (key == "rep") {
        c.rep = rep_from_string(value.get<std::string>());
      } else if (key == "backend") {
        c.backend = backend_choice_from_string(value.get<std::string>());
      } else if (key == "tol") {
        c.tol = value.get<double>();
      } else if (key == "trials") {
        c.trials = value.get<long>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "mass_range") {
        c.mass_range = {value.at(0).get<double>(), value.at(1).get<double>()};
      } else if (key == "momentum_range") {
        c.momentum_range = {value.at(0).get<double>(), value.at(1).get<double>()};
      } else if (key != "json") {
        throw Error("usage", "unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw Error("usage", std::string("bad config value: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == "unknown-rep") throw Error("usage", e.what());
    throw;
  }
  return c;
}

long Report::passed() const {
  long n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

long Report::failed() const { return static_cast<long>(checks.size()) - passed(); }

Json to_json(const Report& r) {
  Json j;
  j["config"] = config_to_json(r.config);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["id"] = c.id;
    e["paper_eq"] = c.paper_eq;
    e["backend"] = to_string(c.backend);
    e["residual"] = c.residual ? Json(*c.residual) : Json(nullptr);
    e["exact_zero"] = c.exact_zero;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
  j["wall_ms"] = r.wall_ms;
  return j;
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.config = config_from_json(j.at("config"));
    for (const auto& e : j.at("checks")) {
      CheckRecord c;
      c.id = e.at("id").get<std::string>();
      c.paper_eq = e.at("paper_eq").get<std::string>();
      c.backend = backend_from_string(e.at("backend").get<std::string>());
      if (!e.at("residual").is_null()) c.residual = e.at("residual").get<double>();
      c.exact_zero = e.at("exact_zero").get<bool>();
      c.pass = e.at("pass").get<bool>();
      r.checks.push_back(std::move(c));
    }
    r.wall_ms = j.at("wall_ms").get<double>();
    if (j.at("summary").at("passed").get<long>() != r.passed() ||
        j.at("summary").at("failed").get<long>() != r.failed()) {
      throw Error("bad-report", "summary disagrees with checks");
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error("bad-report", e.what());
  } catch (const Error& e) {
    if (e.code() == "bad-report") throw;
    throw Error("bad-report", e.what());
  }
}

void emit_report(const Report& r, Format format, std::ostream& os,
                 const std::optional<std::string>& json_path) {
  if (format == Format::json) {
    os << to_json(r).dump(2) << '\n';
  } else {
    for (const auto& c : r.checks) {
      os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(48) << c.id << ' '
         << std::setw(24) << ("[" + c.paper_eq + "]") << ' ' << std::setw(5)
         << to_string(c.backend) << ' ';
      if (c.exact_zero) {
        os << "exact 0";
      } else if (c.residual) {
        os << std::scientific << std::setprecision(3) << *c.residual << std::defaultfloat;
      } else {
        os << "-";
      }
      os << '\n';
    }
    os << "passed " << r.passed() << ", failed " << r.failed() << ", " << std::fixed
       << std::setprecision(1) << r.wall_ms << " ms\n"
       << std::defaultfloat;
  }
  if (json_path) {
    std::ofstream out(*json_path);
    if (!out) throw Error("io", "cannot open " + *json_path);
    out << to_json(r).dump(2) << '\n';
    out.close();
    if (!out) throw Error("io", "cannot write " + *json_path);
  }
}

}  // namespace subdirac::verify
