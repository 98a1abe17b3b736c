#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pcosc/types.hpp"

namespace pcosc {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  double omega = 1.0;
  int dim = 12;
  int margin = 2;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::vector<std::string> suites;  // subset of known suites, or "all"
  bool zero_point_subtracted = false;
  bool include_timestamp = true;
};

// One verification check. `anchor` states the identity being verified, in
// formula form; it is emitted under the `paper_anchor` report column.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string details;
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;
  int total = 0;
  int passed = 0;
  int failed = 0;
  std::string version = kVersion;
  std::string timestamp;  // empty when suppressed
};

const std::vector<std::string>& known_suites();

// Executes the requested suites in canonical order. Deterministic given
// the seed. Throws InputError for unknown suite names or invalid config.
Report run(const RunConfig& config);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);  // header: suite,check,paper_anchor,residual,tolerance,pass

void emit(const Report& report, const std::string& format, std::ostream& out);

}  // namespace pcosc
