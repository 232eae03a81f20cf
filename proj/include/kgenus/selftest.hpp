#pragma once

// Randomized property suites over every layer of the library, runnable from
// the command line.

#include <kgenus/obstruction.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kgenus {

struct SelftestOptions {
  std::uint64_t max_prime = 31;
  std::int64_t max_degree = 50;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  /// Name of a suite whose first check is deliberately falsified. Exists so
  /// the failure path itself can be exercised.
  std::optional<std::string> inject_fault;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;  // first failure, if any
};

std::vector<std::string> selftest_suite_names();

/// Runs suites in order, stopping after the first failing suite. `progress`
/// (optional) is called once per finished suite.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options,
                                      const std::function<void(const SuiteResult&)>& progress = {});

}  // namespace kgenus
