#pragma once

#include "atk/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace atk {

/// Parse failure with 1-based position information.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// Parsed problem file: named object definitions plus an ordered task list.
/// Indices in sparse entries are 1-based in the file and stored 0-based
/// here; rational values are exact. Structure constants are completed
/// antisymmetrically (the convention the header must declare).
struct ProblemFile {
  using SparseEntry = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;

  struct AlgebraDef {
    std::size_t dim = 0;
    std::vector<SparseEntry> entries;  // (i, j, k, value)
  };
  struct PairDef {
    std::string algebra;
    std::vector<std::vector<Rational>> spans;  // each of length dim L
  };
  struct TriadDef {
    std::string pair;
    std::size_t module_dim = 0;
    std::vector<SparseEntry> nabla;  // (A index, row, col, value)
  };
  struct ConnectionDef {
    std::string triad;
    std::vector<SparseEntry> b;  // (B index, row, col, value)
  };
  struct MatchedDef {
    std::string algebra;
    std::vector<std::vector<Rational>> spans_a;
    std::vector<std::vector<Rational>> spans_b;
  };
  struct EquivariantDef {
    std::string acting;
    std::string on;
    std::vector<SparseEntry> act;  // (acting index, row, col, value)
  };
  struct WangDef {
    std::string algebra;  // g
    std::vector<std::vector<Rational>> spans;  // h inside g
    std::string target;   // k
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> dphi;  // (row, col, value)
  };
  struct Task {
    std::string command;
    std::string object;  // empty for selftest
    std::size_t line = 0;
  };

  std::map<std::string, AlgebraDef> algebras;
  std::map<std::string, PairDef> pairs;
  std::map<std::string, TriadDef> triads;
  std::map<std::string, ConnectionDef> connections;
  std::map<std::string, MatchedDef> matched;
  std::map<std::string, EquivariantDef> equivariants;
  std::map<std::string, WangDef> wang;
  std::vector<Task> tasks;
};

/// Parses and validates (header, shapes, name resolution, rational syntax).
/// Throws ParseError.
ProblemFile parse_problem_file(const std::string& text);

}  // namespace atk
