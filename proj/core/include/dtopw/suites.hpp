#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dtopw/topology.hpp"

namespace dtopw {

struct SuiteConfig {
  std::string id;
  int max_size = 4;   // exhaustive suites: labeled posets on 1..max_size points
  int depth = 8;      // gallery depth
  int jobs = 0;       // 0: DTOPW_JOBS, else hardware concurrency
  std::string out;    // report path, used by the CLI
  std::uint64_t seed = 1;
};

struct SuiteFailure {
  int size = 0;  // points in the failing instance, for picking a minimal one
  std::string instance;
  std::string detail;
};

struct SuiteResult {
  std::string id;
  SuiteConfig config;
  long instances = 0;
  long checks = 0;
  std::vector<SuiteFailure> failures;  // sorted by size, then instance order
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  /// Deterministic text report: counts, notes, failures (minimal first).
  std::string summary() const;
};

/// Suite ids accepted by run_suite().
std::vector<std::string> suite_ids();

/// Throws UnknownName for an unknown id and BoundExceeded when max_size > 5
/// or depth > 12.
SuiteResult run_suite(const SuiteConfig& config);

/// DTOPW_JOBS if set and positive, else the hardware concurrency (at least 1).
int default_jobs();

struct PropertyReport {
  std::string property;
  bool holds = false;
  std::string detail;
};

/// Names accepted by check_property().
std::vector<std::string> property_names();

/// Throws UnknownProperty.
PropertyReport check_property(const FiniteSpace& x, std::string_view property);

}  // namespace dtopw
