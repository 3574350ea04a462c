#include "atk/report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace atk {

std::string status_name(Report::Status s) {
  switch (s) {
    case Report::Status::Pass: return "pass";
    case Report::Status::Fail: return "fail";
    case Report::Status::Obstruction: return "obstruction";
    case Report::Status::Error: return "error";
  }
  return "error";
}

namespace {

Report::Status status_from_name(const std::string& name) {
  if (name == "pass") return Report::Status::Pass;
  if (name == "fail") return Report::Status::Fail;
  if (name == "obstruction") return Report::Status::Obstruction;
  if (name == "error") return Report::Status::Error;
  throw std::invalid_argument("unknown report status '" + name + "'");
}

}  // namespace

std::string Report::to_text() const {
  std::string out = "[" + task;
  if (!object.empty()) out += " " + object;
  out += "] " + status_name(status) + "\n";
  for (const auto& [key, value] : payload) out += "  " + key + ": " + value + "\n";
  for (const auto& w : witnesses) out += "  witness: " + w + "\n";
  if (seed) out += "  seed: " + std::to_string(*seed) + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["task"] = task;
  j["object"] = object;
  j["status"] = status_name(status);
  j["payload"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : payload) j["payload"].push_back({key, value});
  j["witnesses"] = witnesses;
  if (seed) j["seed"] = std::to_string(*seed);
  return j.dump();
}

Report Report::from_json(const std::string& line) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
  Report r;
  r.task = j.at("task").get<std::string>();
  r.object = j.at("object").get<std::string>();
  r.status = status_from_name(j.at("status").get<std::string>());
  for (const auto& entry : j.at("payload"))
    r.payload.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<std::string>());
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w.get<std::string>());
  if (j.contains("seed")) r.seed = std::stoull(j.at("seed").get<std::string>());
  return r;
}

std::string render_reports(const std::vector<Report>& reports, bool json) {
  std::string out;
  for (const Report& r : reports) {
    if (json) {
      out += r.to_json();
      out += "\n";
    } else {
      out += r.to_text();
      out += "\n";
    }
  }
  return out;
}

}  // namespace atk
