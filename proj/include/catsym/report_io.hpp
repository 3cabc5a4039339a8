#pragma once

// Command reports as line-oriented key: value text or JSON. Requires the
// vendored nlohmann/json.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catsym/report.hpp"

namespace catsym {

struct CommandReport {
  std::string command;
  std::string input;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::pair<std::string, Report>> verdicts;
  std::vector<std::string> body;  // verbatim trailing lines
  std::optional<double> millis;   // only printed on request

  void field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void verdict(std::string layer, Report r) { verdicts.emplace_back(std::move(layer), std::move(r)); }
};

inline std::string to_text(const CommandReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (!r.input.empty()) os << "input: " << r.input << "\n";
  if (!r.digest.empty()) os << "digest: fnv1a64:" << r.digest << "\n";
  for (const auto& [k, v] : r.fields) os << k << ": " << v << "\n";
  for (const auto& [layer, rep] : r.verdicts) {
    os << "verdict." << layer << ": " << to_string(rep.verdict) << "\n";
    if (!rep.law.empty()) os << "law." << layer << ": " << rep.law << "\n";
    if (!rep.witness.empty()) {
      os << "witness." << layer << ":";
      for (const auto& [role, name] : rep.witness) os << " " << role << "=" << name;
      os << "\n";
    }
    if (!rep.note.empty()) os << "note." << layer << ": " << rep.note << "\n";
  }
  for (const auto& line : r.body) os << line << "\n";
  if (r.millis) os << "time_ms: " << static_cast<long long>(*r.millis) << "\n";
  return os.str();
}

inline nlohmann::ordered_json to_json(const CommandReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  if (!r.input.empty()) j["input"] = r.input;
  if (!r.digest.empty()) j["digest"] = "fnv1a64:" + r.digest;
  auto& fields = j["fields"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields) fields[k] = v;
  auto& verdicts = j["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [layer, rep] : r.verdicts) {
    nlohmann::ordered_json v;
    v["verdict"] = std::string(to_string(rep.verdict));
    if (!rep.law.empty()) v["law"] = rep.law;
    auto& w = v["witness"] = nlohmann::ordered_json::array();
    for (const auto& [role, name] : rep.witness) w.push_back({{"role", role}, {"name", name}});
    if (!rep.note.empty()) v["note"] = rep.note;
    verdicts[layer] = std::move(v);
  }
  if (!r.body.empty()) j["body"] = r.body;
  if (r.millis) j["time_ms"] = static_cast<long long>(*r.millis);
  return j;
}

}  // namespace catsym
