#include "report.hpp"

#include <iomanip>

namespace polymap::cli {

void write_json(std::ostream& out, const RunReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = r.command;
  j["args"] = r.args;
  if (!r.tier.empty()) j["tier"] = r.tier;
  j["status"] = r.failed() ? "fail" : "pass";
  j["result"] = r.result;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    cj["details"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (with_timing) j["timing"] = {{"seconds", r.seconds}};
  out << j.dump(2) << '\n';
}

void write_text(std::ostream& out, const RunReport& r, bool with_timing) {
  for (const auto& l : r.lines) out << l << '\n';
  for (const auto& c : r.checks) {
    out << "[" << c.status << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  if (!r.checks.empty()) out << (r.failed() ? "FAIL" : "PASS") << '\n';
  if (with_timing) out << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
}

}  // namespace polymap::cli
