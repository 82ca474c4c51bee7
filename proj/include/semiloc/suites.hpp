#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semiloc/locality.hpp"

namespace semiloc {

struct SuiteBudgets {
  std::uint64_t enumeration = kDefaultEnumerationBudget;
  std::uint64_t sampling = kDefaultSamplingBudget;
  std::size_t count = 100;
};

struct SuiteOptions {
  SuiteBudgets budgets;
  std::uint64_t seed = 1;
  /// Stop scheduling new instances after the first failure. Which
  /// instances were already running then depends on timing.
  bool fail_fast = false;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

enum class InstanceStatus { Pass, Fail, Error, Skipped };
std::string to_string(InstanceStatus s);

struct InstanceOutcome {
  std::size_t index = 0;
  std::string description;
  InstanceStatus status = InstanceStatus::Skipped;
  std::string message;  ///< failed clause or error text
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> tags;  ///< census keys counted once each

  const std::string* field(const std::string& key) const;
};

struct SuiteReport {
  std::string id;
  std::string operation;  ///< what the suite exercises
  std::uint64_t seed = 0;
  SuiteBudgets budgets;
  std::vector<InstanceOutcome> instances;  ///< ordered by index
  std::map<std::string, std::size_t> census;
  double wall_time_seconds = 0;

  std::size_t failures() const;  ///< Fail + Error
  bool passed() const { return failures() == 0; }
  std::size_t count_tag(const std::string& tag) const;

  /// Flat key=value lines; a function of (id, seed, budgets) only.
  std::string payload() const;
  /// payload() plus the timing line.
  std::string text() const;
  /// Machine-readable summary (no per-instance data).
  std::string summary_json() const;
};

/// RAD, IDEM and the theorem suites L2.1 ... T7.3, in run order.
const std::vector<std::string>& suite_ids();
/// Throws ValidationError for an unknown id.
const std::string& suite_operation(const std::string& id);

/// Generates `budgets.count` instances from the seed (instance i depends
/// only on seed and i), runs the suite's checks on each in a worker pool,
/// and collects the report. Assertion failures and library errors are
/// recorded per instance.
SuiteReport run_suite(const std::string& id, const SuiteOptions& options = {});

}  // namespace semiloc
