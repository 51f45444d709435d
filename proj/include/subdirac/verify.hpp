#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "subdirac/gamma.hpp"
#include "subdirac/report.hpp"

namespace subdirac::verify {

using Json = nlohmann::ordered_json;

enum class Suite { clifford, projectors, split, weyl, majorana, covariance, all };
enum class BackendChoice { exact, floating, both };

std::string to_string(Suite s);
std::string to_string(BackendChoice b);
/// Throw Error("usage") on unknown names.
Suite suite_from_string(const std::string& s);
BackendChoice backend_choice_from_string(const std::string& s);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'd1ac'0000'2024ULL;

struct RunConfig {
  Suite suite = Suite::all;
  RepName rep = RepName::spinor;
  BackendChoice backend = BackendChoice::both;
  double tol = 1e-10;
  long trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::pair<double, double> mass_range{0.1, 10.0};
  std::pair<double, double> momentum_range{0.0, 10.0};

  /// Throws Error("usage") when a field is out of range.
  void validate() const;
  bool runs_exact() const { return backend != BackendChoice::floating; }
  bool runs_float() const { return backend != BackendChoice::exact; }
};

/// Keys as in the JSON report's "config" object; absent keys keep `base`.
RunConfig config_from_json(const Json& j, RunConfig base = {});
Json config_to_json(const RunConfig& c);

struct CheckRecord {
  std::string id;
  std::string paper_eq;
  Backend backend = Backend::exact;
  std::optional<double> residual;
  bool exact_zero = false;
  bool pass = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  double wall_ms = 0.0;

  long passed() const;
  long failed() const;
  bool ok() const { return failed() == 0; }
};

Json to_json(const Report& r);
/// Inverse of to_json; throws Error("bad-report") on schema violations.
Report report_from_json(const Json& j);

/// Splitmix64 step, used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed for trial `trial` of the stream `stream`; independent of trial order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

struct MomentumSample {
  double mass;
  double p1, p2, p3;
};

/// On-shell sample: mass uniform in mass_range (0 when `massless`), spatial
/// momentum with magnitude uniform in momentum_range and isotropic direction.
MomentumSample sample_momentum(const RunConfig& c, std::uint64_t stream, std::uint64_t trial,
                               bool massless);

/// Runs the configured suites: exact checks of every selected suite first,
/// then the floating checks.
Report run(const RunConfig& config);

enum class Format { human, json };

/// Writes the report to `os`, and as JSON to `json_path` if given. Throws
/// Error("io") when the file cannot be written.
void emit_report(const Report& r, Format format, std::ostream& os,
                 const std::optional<std::string>& json_path = std::nullopt);

}  // namespace subdirac::verify
