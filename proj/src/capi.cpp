#include "atk/atk.h"

#include "atk/engine.hpp"
#include "atk/problem_file.hpp"
#include "atk/report.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

struct atk_session {
  std::optional<atk::ProblemFile> file;
  std::string report_text;
  std::string error;
  int exit_code = 0;
};

namespace {

atk_status guard(atk_session* session, const char* what) {
  if (!session) return ATK_ERROR_ARGUMENT;
  session->error.clear();
  if (!what) {
    session->error = "null argument";
    return ATK_ERROR_ARGUMENT;
  }
  return ATK_OK;
}

atk_status load_text(atk_session* session, const std::string& text) {
  try {
    session->file = atk::parse_problem_file(text);
    return ATK_OK;
  } catch (const atk::ParseError& e) {
    session->error = e.what();
    return ATK_ERROR_PARSE;
  } catch (const std::exception& e) {
    session->error = e.what();
    return ATK_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

atk_session* atk_session_new(void) { return new (std::nothrow) atk_session(); }

void atk_session_free(atk_session* session) { delete session; }

atk_status atk_load_file(atk_session* session, const char* path) {
  const atk_status bad = guard(session, path);
  if (bad != ATK_OK) return bad;
  std::ifstream in(path);
  if (!in) {
    session->error = std::string("cannot open '") + path + "'";
    return ATK_ERROR_IO;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return load_text(session, text.str());
}

atk_status atk_load_string(atk_session* session, const char* text) {
  const atk_status bad = guard(session, text);
  if (bad != ATK_OK) return bad;
  return load_text(session, text);
}

atk_status atk_run(atk_session* session, uint64_t seed, int strict, int json) {
  if (!session) return ATK_ERROR_ARGUMENT;
  session->error.clear();
  if (!session->file) {
    session->error = "no problem file loaded";
    return ATK_ERROR_ARGUMENT;
  }
  try {
    atk::RunOptions options;
    options.seed = seed;
    options.strict = strict != 0;
    const atk::RunResult result = atk::run_problem(*session->file, options);
    session->report_text = atk::render_reports(result.reports, json != 0);
    session->exit_code = result.exit_code;
    return ATK_OK;
  } catch (const std::exception& e) {
    session->error = e.what();
    return ATK_ERROR_INTERNAL;
  }
}

atk_status atk_selftest(atk_session* session, uint64_t seed, int json) {
  if (!session) return ATK_ERROR_ARGUMENT;
  session->error.clear();
  try {
    const atk::RunResult result = atk::run_selftest_reports(seed);
    session->report_text = atk::render_reports(result.reports, json != 0);
    session->exit_code = result.exit_code;
    return ATK_OK;
  } catch (const std::exception& e) {
    session->error = e.what();
    return ATK_ERROR_INTERNAL;
  }
}

const char* atk_report(const atk_session* session) {
  return session ? session->report_text.c_str() : "";
}

const char* atk_error_message(const atk_session* session) {
  return session ? session->error.c_str() : "invalid session";
}

int atk_exit_code(const atk_session* session) { return session ? session->exit_code : 2; }

const char* atk_version(void) { return "0.1.0"; }

}  // extern "C"
