#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dgli::verify {

// Raised for unknown check names, unknown parameter keys, or negative
// bounds; always before any check starts executing.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckSpec {
  std::string name;
  std::map<std::string, long> params;  // overrides of per-check defaults
  bool enabled = true;
};

enum class Status { pass, fail, skipped };
std::string_view to_string(Status status);

struct CheckResult {
  std::string name;
  std::map<std::string, long> params;
  Status status = Status::skipped;
  std::string witness_json;  // serialized JSON value; empty means none
  std::int64_t runtime_ms = 0;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  Summary summary;
};

enum class Format { json, csv, markdown };

struct RunOptions {
  unsigned jobs = 0;     // 0 picks the hardware concurrency
  bool timings = false;  // wall clocks vary run to run; reports stay
                         // byte-identical unless explicitly requested
};

// Names of every registered check, sorted.
const std::vector<std::string>& registered_checks();

// Default parameters of a registered check; unknown names raise ConfigError.
const std::map<std::string, long>& check_defaults(std::string_view name);

// Specs of one of the named suites: all, sequences, lie, models.
std::vector<CheckSpec> suite(std::string_view name);

// Validates and expands every spec (sweeps become one entry per parameter
// tuple), executes the expanded checks on a worker pool, and aggregates the
// results sorted by (name, params). Disabled specs contribute one skipped
// entry each.
VerificationReport run_suite(const std::vector<CheckSpec>& specs,
                             const RunOptions& options = {});

std::string emit(const VerificationReport& report, Format format);

}  // namespace dgli::verify
