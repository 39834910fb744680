// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "fpdir/verify.hpp"

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  int failures = 0;
  for (int id = 1; id <= fpdir::verify::kCriterionCount; ++id) {
    const auto r = fpdir::verify::run_criterion(id, fpdir::verify::Suite::all, threads);
    std::printf("[%s] criterion %2d: %s (%.1fs) -- %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failures += r.passed ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", fpdir::verify::kCriterionCount - failures,
              fpdir::verify::kCriterionCount);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
