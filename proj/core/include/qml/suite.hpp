#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qml/io.hpp"

namespace qml {

/// A concrete verification target.
struct Instance {
  std::string name;
  QuiverPtr quiver;
  DimVector alpha;
  StabilityParam theta;
  /// Framing vector for the Engel-Reineke suite; alpha+ and alpha- when unset.
  std::optional<DimVector> beta;
};

struct SuiteConfig {
  std::string suite = "all";
  /// Named instance; the quiver, alpha, theta and beta entries below override its parts.
  std::string preset;
  std::string quiver_path;
  /// Either a path to a JSON file or inline text ("1,1,2" or JSON).
  std::string alpha;
  std::string theta;
  std::string beta;
  std::string field = "F2";
  std::optional<long long> n;
  std::uint64_t budget = Budget::default_limit();
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Random samples for the sampled suites.
  std::size_t samples = 200;
  std::string output;
  /// Adds wall-clock runtimes, which makes reports run-dependent.
  bool timings = false;
};

enum ExitCode : int { kExitOk = 0, kExitFailures = 1, kExitParse = 2, kExitBudget = 3 };

std::vector<std::string> preset_names();
/// Throws UnknownPreset.
SuiteConfig preset(const std::string& name);
Instance preset_instance(const std::string& name);

/// Resolves the preset and file / inline overrides. Throws ParseError.
Instance load_instance(const SuiteConfig& cfg);

struct SuiteEntry {
  std::string name;
  /// The library verification operation the suite drives.
  std::string operation;
};

/// Every suite in run order; "all" runs them in this order.
const std::vector<SuiteEntry>& suite_registry();

struct SuiteResult {
  int exit_code = kExitOk;
  io::Json report;
};

/// Never throws for bad input: parse problems give exit 2 and budget
/// exhaustion exit 3, each with an "error" member in the report.
SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace qml
