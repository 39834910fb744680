#pragma once

// Acceptance suites. "all" runs every criterion at full scale; "small" keeps
// the same checks at reduced prime ranges so it finishes in seconds.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpdir::verify {

enum class Suite { small, all };

std::optional<Suite> parse_suite(std::string_view name);

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

inline constexpr int kCriterionCount = 10;

// Runs criterion `id` in [1, kCriterionCount]. Any exception thrown by the
// library is caught and reported as a failure.
CriterionResult run_criterion(int id, Suite suite, unsigned threads = 1);

std::vector<CriterionResult> run_suite(Suite suite, unsigned threads = 1);

}  // namespace fpdir::verify
