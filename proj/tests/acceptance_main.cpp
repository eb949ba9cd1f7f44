// Acceptance suite: runs every verification criterion at full sample counts
// and prints one PASS/FAIL line per criterion (sub-checks indented).

#include <cstdio>
#include <cstring>
#include <map>
#include <vector>

#include "monogamy/verify.hpp"

int main(int argc, char** argv) {
  monogamy::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      options.seed = std::strtoull(argv[++i], nullptr, 10);
  }

  std::vector<monogamy::CheckResult> results =
      monogamy::run_acceptance_suite(options, [](const monogamy::CheckResult& r) {
        std::printf("    [%s] %-34s expected=%.12g observed=%.12g tol=%.3g\n",
                    r.pass ? "ok" : "FAIL", r.name.c_str(), r.expected, r.observed,
                    r.tolerance);
        std::fflush(stdout);
      });

  std::map<int, bool> criterion_pass;
  for (const auto& r : results) {
    auto [it, inserted] = criterion_pass.try_emplace(r.criterion, true);
    it->second = it->second && r.pass;
  }

  int failures = 0;
  for (const auto& [criterion, pass] : criterion_pass) {
    std::printf("criterion %2d: %s\n", criterion, pass ? "PASS" : "FAIL");
    failures += pass ? 0 : 1;
  }
  if (options.quick) std::printf("criterion 10: SKIPPED (--quick)\n");
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criterion_pass.size()) - failures,
              criterion_pass.size());
  return failures == 0 ? 0 : 1;
}
