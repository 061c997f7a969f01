#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "adfbn/core.hpp"

namespace adfbn {

enum class BenchOutcome { completed, timeout, budget, error };
std::string_view outcome_name(BenchOutcome outcome);

struct BenchRecord {
  std::string instance;
  std::string method;
  double seconds = 0;
  BenchOutcome outcome = BenchOutcome::completed;
  std::size_t count = 0;
  /// Set only when at least two methods completed on the instance.
  std::optional<bool> agree;
  std::string message;  // reason for error outcomes
};

struct BenchOptions {
  std::vector<std::string> methods{"brute", "sat"};
  double timeout_seconds = 60;
  unsigned jobs = 0;  // 0 = hardware concurrency
  Limits limits = Limits::defaults();
};

struct BenchReport {
  std::vector<BenchRecord> records;  // by instance, then method as given
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t errors = 0;

  bool ok() const { return disagreements == 0 && errors == 0; }
};

/// Known bench methods: "brute" (exhaustive preferred) and "sat".
bool is_bench_method(std::string_view name);

/// Every .apx/.adf/.bnet file in `dir` (sorted by name), preferred
/// interpretations per method, one worker slot per (instance, method).
BenchReport run_bench(const std::filesystem::path& dir, const BenchOptions& options);

/// Header `instance,method,seconds,outcome,count,agree`.
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace adfbn
