// Command-line front end. Built against the C API only.

#include "atk/atk.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace {

void usage(std::FILE* out) {
  std::fprintf(out,
               "usage: atk run <file> [--strict] [--seed N] [--json|--text]\n"
               "       atk selftest [--seed N] [--json|--text]\n"
               "\n"
               "Exit codes: 0 all tasks passed, 1 a check failed or an\n"
               "obstruction was found under --strict, 2 input error.\n");
}

struct Options {
  std::string file;
  uint64_t seed = 0;
  bool strict = false;
  bool json = false;
};

bool parse_flags(int argc, char** argv, int first, bool expect_file, Options& options) {
  int positional = 0;
  for (int i = first; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--strict") {
      options.strict = true;
    } else if (arg == "--json") {
      options.json = true;
    } else if (arg == "--text") {
      options.json = false;
    } else if (arg == "--seed") {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "atk: --seed needs a value\n");
        return false;
      }
      char* end = nullptr;
      options.seed = std::strtoull(argv[++i], &end, 10);
      if (!end || *end != '\0') {
        std::fprintf(stderr, "atk: --seed needs an unsigned integer\n");
        return false;
      }
    } else if (!arg.empty() && arg[0] == '-') {
      std::fprintf(stderr, "atk: unknown flag '%s'\n", arg.c_str());
      return false;
    } else if (expect_file && positional == 0) {
      options.file = arg;
      ++positional;
    } else {
      std::fprintf(stderr, "atk: unexpected argument '%s'\n", arg.c_str());
      return false;
    }
  }
  if (expect_file && options.file.empty()) {
    std::fprintf(stderr, "atk: run needs a problem file\n");
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage(stderr);
    return 2;
  }
  const std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    usage(stdout);
    return 0;
  }
  if (command == "--version") {
    std::printf("atk %s\n", atk_version());
    return 0;
  }

  const bool is_run = command == "run";
  const bool is_selftest = command == "selftest";
  if (!is_run && !is_selftest) {
    std::fprintf(stderr, "atk: unknown command '%s'\n", command.c_str());
    usage(stderr);
    return 2;
  }

  Options options;
  if (!parse_flags(argc, argv, 2, is_run, options)) return 2;

  atk_session* session = atk_session_new();
  if (!session) {
    std::fprintf(stderr, "atk: out of memory\n");
    return 2;
  }

  int exit_code = 2;
  atk_status status = ATK_OK;
  if (is_run) {
    status = atk_load_file(session, options.file.c_str());
    if (status == ATK_OK)
      status = atk_run(session, options.seed, options.strict ? 1 : 0, options.json ? 1 : 0);
  } else {
    status = atk_selftest(session, options.seed, options.json ? 1 : 0);
  }

  if (status != ATK_OK) {
    std::fprintf(stderr, "atk: %s\n", atk_error_message(session));
  } else {
    std::fputs(atk_report(session), stdout);
    exit_code = atk_exit_code(session);
  }

  atk_session_free(session);
  return exit_code;
}
