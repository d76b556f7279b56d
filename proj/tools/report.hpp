#pragma once

// Run reports shared by every subcommand: checks with pass/fail/skip status,
// a command-specific result payload, and the two output renderings.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace polymap::cli {

inline constexpr int kSchemaVersion = 1;

struct Check {
  std::string name;
  std::string status;  // "pass", "fail", "skipped-budget"
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<std::string> args;
  std::string tier;  // empty when the command has no tiers
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> lines;  // human-readable summary
  std::vector<Check> checks;
  double seconds = 0;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    checks.push_back({std::move(name), "skipped-budget", std::move(detail)});
  }
  bool failed() const {
    for (const auto& c : checks) {
      if (c.status == "fail") return true;
    }
    return false;
  }
};

void write_json(std::ostream& out, const RunReport& r, bool with_timing);
void write_text(std::ostream& out, const RunReport& r, bool with_timing);

}  // namespace polymap::cli
