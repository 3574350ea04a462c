#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atk {

/// One machine-readable result per task. Every numeric payload entry is an
/// exact rational or integer string; there are no floats anywhere. Payload
/// order is part of the structure, so serialization is byte-stable and
/// round-trips exactly.
struct Report {
  enum class Status { Pass, Fail, Obstruction, Error };

  std::string task;
  std::string object;
  Status status = Status::Pass;
  std::vector<std::pair<std::string, std::string>> payload;
  std::vector<std::string> witnesses;
  std::optional<std::uint64_t> seed;

  void add(std::string key, std::string value) {
    payload.emplace_back(std::move(key), std::move(value));
  }
  bool operator==(const Report&) const = default;

  std::string to_text() const;
  /// One JSON object, keys in fixed order.
  std::string to_json() const;
  static Report from_json(const std::string& line);
};

std::string status_name(Report::Status s);

/// Text blocks separated by blank lines, or one JSON object per line.
std::string render_reports(const std::vector<Report>& reports, bool json);

}  // namespace atk
