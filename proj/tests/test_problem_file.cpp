#include <doctest.h>

#include "atk/engine.hpp"
#include "atk/problem_file.hpp"
#include "atk/report.hpp"

using namespace atk;

namespace {

const char* kMinimal = R"(format atk/1
convention antisymmetric

begin algebra sl2
  dim 3
  c 1 2 2 2
  c 1 3 3 -2
  c 2 3 1 1
end

begin pair borel
  algebra sl2
  span 1 0 0
  span 0 1 0
end

begin triad std
  pair borel
  module 2
  nabla 1 1 1 1
  nabla 1 2 2 -1
  nabla 2 1 2 1
end

begin connection cstd
  triad std
  b 1 2 1 1
end

task validate sl2
task class std
task cocycle cstd
)";

RunResult run_text(const std::string& text, bool strict = false) {
  RunOptions options;
  options.strict = strict;
  return run_problem(parse_problem_file(text), options);
}

}  // namespace

TEST_CASE("a complete file parses") {
  const ProblemFile file = parse_problem_file(kMinimal);
  CHECK(file.algebras.count("sl2") == 1);
  CHECK(file.algebras.at("sl2").dim == 3);
  CHECK(file.pairs.at("borel").spans.size() == 2);
  CHECK(file.triads.at("std").module_dim == 2);
  CHECK(file.tasks.size() == 3);
  CHECK(file.tasks[1].command == "class");
}

TEST_CASE("parse errors carry line and column") {
  SUBCASE("missing header") {
    try {
      parse_problem_file("begin algebra a\nend\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("zero denominator") {
    const std::string bad = "format atk/1\nconvention antisymmetric\n"
                            "begin algebra a\n  dim 2\n  c 1 2 1 1/0\nend\n";
    try {
      parse_problem_file(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(e.column() == 11);
      CHECK(std::string(e.what()).find("denominator") != std::string::npos);
    }
  }
  SUBCASE("unknown command") {
    CHECK_THROWS_AS(parse_problem_file("format atk/1\ntask frobnicate x\n"), ParseError);
  }
  SUBCASE("unresolved reference") {
    CHECK_THROWS_WITH_AS(parse_problem_file("format atk/1\ntask validate nope\n"),
                         doctest::Contains("unresolved"), ParseError);
  }
  SUBCASE("missing convention") {
    CHECK_THROWS_WITH_AS(parse_problem_file("format atk/1\nbegin algebra a\n  dim 1\nend\n"),
                         doctest::Contains("convention"), ParseError);
  }
  SUBCASE("unterminated block") {
    CHECK_THROWS_WITH_AS(
        parse_problem_file("format atk/1\nconvention antisymmetric\nbegin algebra a\n  dim 1\n"),
        doctest::Contains("unterminated"), ParseError);
  }
}

TEST_CASE("antisymmetric completion is applied") {
  const ProblemFile file = parse_problem_file(kMinimal);
  RunOptions options;
  const RunResult result = run_problem(file, options);
  REQUIRE(result.reports.size() == 3);
  CHECK(result.reports[0].status == Report::Status::Pass);  // validate sl2
}

TEST_CASE("engine statuses and exit codes") {
  SUBCASE("clean run exits 0") {
    const RunResult result = run_text(kMinimal);
    CHECK(result.exit_code == 0);
    for (const Report& r : result.reports) CHECK(r.status == Report::Status::Pass);
  }
  SUBCASE("obstructions exit 0 unless strict") {
    const std::string text = R"(format atk/1
convention antisymmetric
begin algebra solv2
  dim 2
  c 1 2 2 1
end
begin pair vertical
  algebra solv2
  span 0 1
end
begin triad twisted
  pair vertical
  module 1
  nabla 1 1 1 1
end
task class twisted
task solve-compatible twisted
)";
    const RunResult relaxed = run_text(text);
    CHECK(relaxed.exit_code == 0);
    REQUIRE(relaxed.reports.size() == 2);
    CHECK(relaxed.reports[0].status == Report::Status::Obstruction);
    CHECK(relaxed.reports[1].status == Report::Status::Obstruction);
    const RunResult strict = run_text(text, true);
    CHECK(strict.exit_code == 1);
  }
  SUBCASE("mathematical input errors exit 2 with a witness") {
    const std::string text = R"(format atk/1
convention antisymmetric
begin algebra sl2
  dim 3
  c 1 2 2 2
  c 1 3 3 -2
  c 2 3 1 1
end
begin pair notclosed
  algebra sl2
  span 0 1 0
  span 0 0 1
end
task pair notclosed
)";
    const RunResult result = run_text(text);
    CHECK(result.exit_code == 2);
    REQUIRE(result.reports.size() == 1);
    CHECK(result.reports[0].status == Report::Status::Error);
    REQUIRE(result.reports[0].witnesses.size() == 1);
    CHECK(result.reports[0].witnesses[0].find("not closed") != std::string::npos);
  }
  SUBCASE("failed validation exits 1") {
    // a non-Jacobi table (antisymmetric, so completion keeps it)
    const std::string text = R"(format atk/1
convention antisymmetric
begin algebra broken
  dim 3
  c 1 2 1 1
  c 2 3 2 1
  c 1 3 3 1
end
task validate broken
)";
    const RunResult result = run_text(text);
    CHECK(result.exit_code == 1);
    CHECK(result.reports[0].status == Report::Status::Fail);
    CHECK_FALSE(result.reports[0].witnesses.empty());
  }
}

TEST_CASE("report payloads are exact rational strings") {
  const RunResult result = run_text(kMinimal);
  const Report& cocycle = result.reports[2];
  REQUIRE(cocycle.task == "cocycle");
  bool saw_table = false;
  for (const auto& [key, value] : cocycle.payload) {
    if (key.rfind("R(", 0) == 0) {
      saw_table = true;
      CHECK(value.find('.') == std::string::npos);  // no floats anywhere
    }
  }
  CHECK(saw_table);
}

TEST_CASE("report JSON round-trips to an identical structure") {
  const RunResult result = run_text(kMinimal);
  for (const Report& r : result.reports) {
    const std::string line = r.to_json();
    const Report back = Report::from_json(line);
    CHECK(back == r);
    CHECK(back.to_json() == line);  // byte-stable
  }
  // also with witnesses and a seed
  Report r;
  r.task = "selftest";
  r.object = "criterion-3-jacobi-bianchi";
  r.status = Report::Status::Fail;
  r.add("detail", "…");
  r.witnesses = {"jacobi (1,2,3)", "value -5/7"};
  r.seed = 42;
  CHECK(Report::from_json(r.to_json()) == r);
}

TEST_CASE("identical runs render identical bytes") {
  const ProblemFile file = parse_problem_file(kMinimal);
  RunOptions options;
  options.seed = 42;
  const std::string a = render_reports(run_problem(file, options).reports, true);
  const std::string b = render_reports(run_problem(file, options).reports, true);
  CHECK(a == b);
  const std::string at = render_reports(run_problem(file, options).reports, false);
  const std::string bt = render_reports(run_problem(file, options).reports, false);
  CHECK(at == bt);
}

TEST_CASE("all commands execute on the shipped fixture definitions") {
  const std::string text = R"(format atk/1
convention antisymmetric
begin algebra rot3
  dim 3
  c 1 2 3 1
  c 2 3 1 1
  c 3 1 2 1
end
begin algebra line
  dim 1
end
begin wang hopf
  algebra rot3
  span 0 0 1
  target line
  dphi 1 1 1
end
begin algebra sl2
  dim 3
  c 1 2 2 2
  c 1 3 3 -2
  c 2 3 1 1
end
begin matched msl2
  algebra sl2
  spanA 1 0 0
  spanA 0 1 0
  spanB 0 0 1
end
task wang hopf
task reductive hopf
task canonical-connection hopf
task matched-check msl2
task matched-sum msl2
task recognize-matched msl2
task derivations sl2
)";
    const RunResult result = run_text(text);
    CHECK(result.exit_code == 0);
    for (const Report& r : result.reports) {
      INFO(r.task);
      CHECK(r.status == Report::Status::Pass);
    }
    // the wang report carries the unique solution and the assumption flag
    const Report& wang = result.reports[0];
    bool saw_particular = false, saw_assumption = false;
    for (const auto& [key, value] : wang.payload) {
      if (key == "particular") {
        saw_particular = true;
        CHECK(value == "[[0,0,1]]");
      }
      if (key == "connected_isotropy_assumption") saw_assumption = true;
    }
    CHECK(saw_particular);
    CHECK(saw_assumption);
}
