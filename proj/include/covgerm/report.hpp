#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace covgerm {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Outcome of a batch of named checks. Exact reports carry no tolerance.
struct VerificationReport {
  std::vector<Check> checks;
  std::optional<double> tolerance;

  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c.name);
    return out;
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return arr;
  }
};

}  // namespace covgerm
