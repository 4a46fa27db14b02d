#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brf/execution.hpp"

namespace brf {

/// Randomized property suites. Each case is generated from (seed, case index)
/// alone, so any failing case can be replayed in isolation.
enum class Suite {
  kLemma1,      // telescoping derivative: identity, monotonicity, linearity
  kLemma2,      // swap, product rule, discrepancy decomposition
  kThm1,        // Bezoutian: determinant forms agree, degree bound, expansion route
  kThm1Unique,  // Bezoutian uniqueness witnesses over the doubled variables
  kThm2,        // extension step: degree bound, ideal stability, choice independence
  kThm3,        // product functional: annihilation growth, choice independence
  kThm4,        // product functional commutativity
};

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
/// "all" expands to every suite; otherwise a single suite. Empty on an unknown name.
std::vector<Suite> expand_suites(std::string_view name);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 20;
  std::size_t first_case = 0;
  std::size_t nmax = 3;
  int degmax = 3;
  /// Perturbs the telescoping derivative under test; every suite using it must fail.
  bool corrupt_derivative = false;
  Execution exec = Execution::Parallel;
};

struct CaseOutcome {
  bool passed = false;
  std::string detail;
  nlohmann::json inputs;
};

/// Runs one case; never throws (exceptions become failures).
CaseOutcome run_case(Suite suite, std::size_t case_index, const VerifyOptions& opts);

struct SuiteReport {
  Suite suite{};
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<nlohmann::json> counterexample;
};

struct RunReport {
  std::string command;
  VerifyOptions options;
  std::vector<SuiteReport> suites;
  double duration_seconds = 0;

  std::size_t total_cases() const;
  std::size_t total_passed() const;
  bool ok() const { return total_cases() == total_passed(); }

  /// Identical for equal inputs when include_duration is false.
  nlohmann::json to_json(bool include_duration = true) const;
};

RunReport run_verification(const std::vector<Suite>& suites, const VerifyOptions& opts, std::string command = {});

}  // namespace brf
