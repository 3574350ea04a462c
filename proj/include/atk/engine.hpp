#pragma once

#include "atk/problem_file.hpp"
#include "atk/report.hpp"

namespace atk {

struct RunOptions {
  std::uint64_t seed = 0;
  bool strict = false;
};

struct RunResult {
  std::vector<Report> reports;
  /// 0: all tasks passed (obstructions tolerated unless strict);
  /// 1: a check failed, or an obstruction was found under --strict;
  /// 2: an input error.
  int exit_code = 0;
};

/// Executes the tasks of a problem file in order, one report per task
/// (the selftest task emits one report per criterion).
RunResult run_problem(const ProblemFile& file, const RunOptions& options);

/// The selftest as a run of its own.
RunResult run_selftest_reports(std::uint64_t seed);

}  // namespace atk
