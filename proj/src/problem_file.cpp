#include "atk/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace atk {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

const std::vector<std::string> kCommands = {
    "validate",         "pair",        "bott",
    "eth",              "cocycle",     "class",
    "solve-compatible", "extensions",  "hexagon",
    "matched-check",    "matched-sum", "recognize-matched",
    "derivations",      "equivariant", "wang",
    "reductive",        "canonical-connection", "selftest"};

class Parser {
public:
  explicit Parser(const std::string& text) : input_(text) {}

  ProblemFile run() {
    std::string line;
    while (std::getline(input_, line)) {
      ++lineno_;
      tokens_ = tokenize(line);
      if (tokens_.empty()) continue;
      dispatch();
    }
    if (!block_.empty()) fail(1, "unterminated block '" + block_ + " " + name_ + "'");
    if (!saw_format_) fail(1, "missing 'format atk/1' header");
    resolve();
    return std::move(file_);
  }

private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(lineno_ == 0 ? 1 : lineno_, column, message);
  }

  const Token& arg(std::size_t i, const char* what) const {
    if (i >= tokens_.size())
      fail(tokens_.back().column + tokens_.back().text.size(),
           std::string("expected ") + what);
    return tokens_[i];
  }

  std::size_t count_from(const Token& t) const {
    if (t.text.empty()) fail(t.column, "expected a count");
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(t.column, "expected a count");
    return std::stoull(t.text);
  }

  std::size_t index_from(const Token& t) const {
    const std::size_t v = count_from(t);
    if (v == 0) fail(t.column, "indices are 1-based");
    return v - 1;
  }

  Rational rational_from(const Token& t) const {
    try {
      return Rational::parse(t.text);
    } catch (const std::invalid_argument& e) {
      fail(t.column, e.what());
    }
  }

  std::vector<Rational> span_from(std::size_t first) const {
    std::vector<Rational> out;
    for (std::size_t i = first; i < tokens_.size(); ++i)
      out.push_back(rational_from(tokens_[i]));
    if (out.empty()) fail(tokens_.back().column + tokens_.back().text.size(),
                          "expected span coordinates");
    return out;
  }

  void dispatch() {
    const std::string& head = tokens_[0].text;
    if (head == "format") {
      if (arg(1, "format identifier").text != "atk/1")
        fail(tokens_[1].column, "unsupported format (expected atk/1)");
      saw_format_ = true;
      return;
    }
    if (!saw_format_) fail(tokens_[0].column, "file must start with 'format atk/1'");
    if (head == "convention") {
      if (arg(1, "convention name").text != "antisymmetric")
        fail(tokens_[1].column,
             "unknown convention (structure constants are completed antisymmetrically)");
      saw_convention_ = true;
      return;
    }
    if (head == "begin") {
      if (!block_.empty()) fail(tokens_[0].column, "nested blocks are not allowed");
      block_ = arg(1, "block kind").text;
      name_ = arg(2, "object name").text;
      if (block_ == "algebra" && !saw_convention_)
        fail(tokens_[0].column, "declare 'convention antisymmetric' before any algebra");
      begin_block();
      return;
    }
    if (head == "end") {
      if (block_.empty()) fail(tokens_[0].column, "'end' outside a block");
      block_.clear();
      return;
    }
    if (head == "task") {
      if (!block_.empty()) fail(tokens_[0].column, "tasks may not appear inside blocks");
      const std::string command = arg(1, "command").text;
      if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
        fail(tokens_[1].column, "unknown command '" + command + "'");
      std::string object;
      if (command != "selftest") object = arg(2, "object name").text;
      file_.tasks.push_back({command, object, lineno_});
      return;
    }
    if (!block_.empty()) {
      block_line(head);
      return;
    }
    fail(tokens_[0].column, "unexpected directive '" + head + "'");
  }

  void begin_block() {
    auto unique = [&](auto& map) {
      if (map.count(name_)) fail(tokens_[2].column, "duplicate name '" + name_ + "'");
      map[name_] = {};
    };
    if (block_ == "algebra") unique(file_.algebras);
    else if (block_ == "pair") unique(file_.pairs);
    else if (block_ == "triad") unique(file_.triads);
    else if (block_ == "connection") unique(file_.connections);
    else if (block_ == "matched") unique(file_.matched);
    else if (block_ == "equivariant") unique(file_.equivariants);
    else if (block_ == "wang") unique(file_.wang);
    else fail(tokens_[1].column, "unknown block kind '" + block_ + "'");
  }

  ProblemFile::SparseEntry entry4(const char* what) {
    arg(4, what);
    return {index_from(tokens_[1]), index_from(tokens_[2]), index_from(tokens_[3]),
            rational_from(tokens_[4])};
  }

  void block_line(const std::string& head) {
    if (block_ == "algebra") {
      auto& def = file_.algebras[name_];
      if (head == "dim") def.dim = count_from(arg(1, "dimension"));
      else if (head == "c") def.entries.push_back(entry4("structure constant (i j k value)"));
      else fail(tokens_[0].column, "unknown algebra directive '" + head + "'");
      return;
    }
    if (block_ == "pair") {
      auto& def = file_.pairs[name_];
      if (head == "algebra") def.algebra = arg(1, "algebra name").text;
      else if (head == "span") def.spans.push_back(span_from(1));
      else fail(tokens_[0].column, "unknown pair directive '" + head + "'");
      return;
    }
    if (block_ == "triad") {
      auto& def = file_.triads[name_];
      if (head == "pair") def.pair = arg(1, "pair name").text;
      else if (head == "module") def.module_dim = count_from(arg(1, "module dimension"));
      else if (head == "nabla") def.nabla.push_back(entry4("action entry (a row col value)"));
      else fail(tokens_[0].column, "unknown triad directive '" + head + "'");
      return;
    }
    if (block_ == "connection") {
      auto& def = file_.connections[name_];
      if (head == "triad") def.triad = arg(1, "triad name").text;
      else if (head == "b") def.b.push_back(entry4("assignment entry (b row col value)"));
      else fail(tokens_[0].column, "unknown connection directive '" + head + "'");
      return;
    }
    if (block_ == "matched") {
      auto& def = file_.matched[name_];
      if (head == "algebra") def.algebra = arg(1, "algebra name").text;
      else if (head == "spanA") def.spans_a.push_back(span_from(1));
      else if (head == "spanB") def.spans_b.push_back(span_from(1));
      else fail(tokens_[0].column, "unknown matched directive '" + head + "'");
      return;
    }
    if (block_ == "equivariant") {
      auto& def = file_.equivariants[name_];
      if (head == "acting") def.acting = arg(1, "algebra name").text;
      else if (head == "on") def.on = arg(1, "algebra name").text;
      else if (head == "act") def.act.push_back(entry4("action entry (g row col value)"));
      else fail(tokens_[0].column, "unknown equivariant directive '" + head + "'");
      return;
    }
    if (block_ == "wang") {
      auto& def = file_.wang[name_];
      if (head == "algebra") def.algebra = arg(1, "algebra name").text;
      else if (head == "span") def.spans.push_back(span_from(1));
      else if (head == "target") def.target = arg(1, "algebra name").text;
      else if (head == "dphi") {
        arg(3, "entry (row col value)");
        def.dphi.push_back(
            {index_from(tokens_[1]), index_from(tokens_[2]), rational_from(tokens_[3])});
      } else fail(tokens_[0].column, "unknown wang directive '" + head + "'");
      return;
    }
  }

  void resolve() const {
    auto need = [&](const auto& map, const std::string& name, const char* kind) {
      if (name.empty()) throw ParseError(1, 1, std::string("missing ") + kind + " reference");
      if (!map.count(name))
        throw ParseError(1, 1, std::string("unresolved ") + kind + " '" + name + "'");
    };
    auto algebra_dim = [&](const std::string& name) { return file_.algebras.at(name).dim; };

    for (const auto& [name, def] : file_.algebras)
      for (const auto& [i, j, k, v] : def.entries)
        if (i >= def.dim || j >= def.dim || k >= def.dim)
          throw ParseError(1, 1, "algebra '" + name + "': index out of range");
    for (const auto& [name, def] : file_.pairs) {
      need(file_.algebras, def.algebra, "algebra");
      for (const auto& span : def.spans)
        if (span.size() != algebra_dim(def.algebra))
          throw ParseError(1, 1, "pair '" + name + "': span length mismatch");
    }
    for (const auto& [name, def] : file_.triads) {
      need(file_.pairs, def.pair, "pair");
      const auto& pair = file_.pairs.at(def.pair);
      for (const auto& [a, r, c, v] : def.nabla)
        if (a >= pair.spans.size() || r >= def.module_dim || c >= def.module_dim)
          throw ParseError(1, 1, "triad '" + name + "': action entry out of range");
    }
    for (const auto& [name, def] : file_.connections) {
      need(file_.triads, def.triad, "triad");
      const auto& triad = file_.triads.at(def.triad);
      const auto& pair = file_.pairs.at(triad.pair);
      if (pair.spans.size() > algebra_dim(pair.algebra))
        throw ParseError(1, 1, "pair '" + triad.pair + "': too many spans");
      const std::size_t b_dim = algebra_dim(pair.algebra) - pair.spans.size();
      for (const auto& [b, r, c, v] : def.b)
        if (b >= b_dim || r >= triad.module_dim || c >= triad.module_dim)
          throw ParseError(1, 1, "connection '" + name + "': entry out of range");
    }
    for (const auto& [name, def] : file_.matched) {
      need(file_.algebras, def.algebra, "algebra");
      for (const auto& span : def.spans_a)
        if (span.size() != algebra_dim(def.algebra))
          throw ParseError(1, 1, "matched '" + name + "': spanA length mismatch");
      for (const auto& span : def.spans_b)
        if (span.size() != algebra_dim(def.algebra))
          throw ParseError(1, 1, "matched '" + name + "': spanB length mismatch");
    }
    for (const auto& [name, def] : file_.equivariants) {
      need(file_.algebras, def.acting, "algebra");
      need(file_.algebras, def.on, "algebra");
      for (const auto& [g, r, c, v] : def.act)
        if (g >= algebra_dim(def.acting) || r >= algebra_dim(def.on) ||
            c >= algebra_dim(def.on))
          throw ParseError(1, 1, "equivariant '" + name + "': entry out of range");
    }
    for (const auto& [name, def] : file_.wang) {
      need(file_.algebras, def.algebra, "algebra");
      need(file_.algebras, def.target, "algebra");
      for (const auto& span : def.spans)
        if (span.size() != algebra_dim(def.algebra))
          throw ParseError(1, 1, "wang '" + name + "': span length mismatch");
      for (const auto& [r, c, v] : def.dphi)
        if (r >= algebra_dim(def.target) || c >= def.spans.size())
          throw ParseError(1, 1, "wang '" + name + "': dphi entry out of range");
    }
    for (const auto& task : file_.tasks) {
      auto check = [&](const auto& map, const char* kind) {
        if (!map.count(task.object))
          throw ParseError(task.line, 1,
                           std::string("task '") + task.command + "': unresolved " + kind +
                               " '" + task.object + "'");
      };
      const std::string& c = task.command;
      if (c == "validate" || c == "derivations") check(file_.algebras, "algebra");
      else if (c == "pair" || c == "bott" || c == "eth") check(file_.pairs, "pair");
      else if (c == "class" || c == "solve-compatible") check(file_.triads, "triad");
      else if (c == "cocycle" || c == "extensions" || c == "hexagon")
        check(file_.connections, "connection");
      else if (c == "matched-check" || c == "matched-sum" || c == "recognize-matched")
        check(file_.matched, "matched");
      else if (c == "equivariant") check(file_.equivariants, "equivariant");
      else if (c == "wang" || c == "reductive" || c == "canonical-connection")
        check(file_.wang, "wang");
    }
  }

  std::istringstream input_;
  ProblemFile file_;
  std::size_t lineno_ = 0;
  std::vector<Token> tokens_;
  std::string block_;
  std::string name_;
  bool saw_format_ = false;
  bool saw_convention_ = false;
};

}  // namespace

ProblemFile parse_problem_file(const std::string& text) { return Parser(text).run(); }

}  // namespace atk
