#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestResult {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return true;
  }
};

/// Runs the full property suite against the built-in fixture families with
/// the given randomization seed. Deterministic: the same seed yields the
/// same results and detail strings, byte for byte.
SelftestResult run_selftest(std::uint64_t seed);

/// One "criterion N pass/fail name (detail)" line per criterion.
std::string selftest_text(const SelftestResult& result);

}  // namespace atk
