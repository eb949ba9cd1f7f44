#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace monogamy {

/// One assertion of the verification suite. `expected` is the target or
/// bound, `observed` the measured quantity, and pass means
/// |observed - expected| <= tolerance for two-sided checks or
/// observed <= expected + tolerance for one-sided ones.
struct CheckResult {
  int criterion;  // 1..10
  std::string name;
  double expected;
  double observed;
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  bool quick = false;  // ~100x fewer samples, slow criterion skipped
  std::uint64_t seed = 0;
};

using CheckSink = std::function<void(const CheckResult&)>;

/// Runs the full verification suite (criteria 1-10). Deterministic for a
/// fixed seed. The sink, when set, sees each check as it completes.
std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& options,
                                              const CheckSink& sink = {});

}  // namespace monogamy
