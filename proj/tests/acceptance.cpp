// Acceptance suite: runs every criterion of the property suite at its
// stated tolerance (exact, zero tolerance) and prints one line per
// criterion. Exits nonzero if any criterion fails.

#include "atk/report.hpp"
#include "atk/selftest.hpp"

#include <chrono>
#include <cstdio>

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  const atk::SelftestResult result = atk::run_selftest(42);
  std::fputs(atk::selftest_text(result).c_str(), stdout);

  // Criterion 13 also holds across full invocations: serialize the whole
  // suite twice and compare bytes.
  const atk::SelftestResult again = atk::run_selftest(42);
  const bool identical = atk::selftest_text(again) == atk::selftest_text(result);
  if (!identical) std::printf("acceptance: serialized selftest reports differ\n");

  const auto seconds =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count() /
      1000.0;
  std::printf("acceptance: %zu criteria in %.1fs\n", result.criteria.size(), seconds);

  return (result.all_pass() && identical) ? 0 : 1;
}
