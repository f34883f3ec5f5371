#include "report_doc.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace capset::app {
namespace {

double millis(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

std::string role_name(CheckRole r) { return r == CheckRole::kAsserted ? "asserted" : "reported"; }

}  // namespace

bool ReportDoc::all_asserted_passed() const {
  for (const auto& c : checks) {
    if (c.role == CheckRole::kAsserted && !c.report.passed) return false;
  }
  return true;
}

void render_text(const ReportDoc& doc, std::ostream& out) {
  out << "report:\n";
  out << "  command: " << doc.command << '\n';
  for (const auto& [k, v] : doc.fields) out << "  " << k << ": " << v << '\n';
  out << "  checks:\n";
  for (const auto& c : doc.checks) {
    const auto& r = c.report;
    out << "    - property: " << r.property << '\n';
    if (!c.subject.empty()) out << "      subject: " << c.subject << '\n';
    out << "      role: " << role_name(c.role) << '\n';
    out << "      passed: " << (r.passed ? "true" : "false") << '\n';
    out << "      examined: " << r.examined << '\n';
    out << "      unit: " << r.unit << '\n';
    out << "      workers: " << r.workers << '\n';
    out << "      elapsed_ms: " << std::fixed << std::setprecision(3) << millis(r.elapsed)
        << '\n';
    out.unsetf(std::ios::floatfield);
    if (!r.detail.empty()) out << "      detail: " << r.detail << '\n';
    if (r.witness.empty()) {
      out << "      witness: []\n";
    } else {
      out << "      witness:\n";
      for (const auto& p : r.witness) out << "        - " << p.to_string() << '\n';
    }
  }
  out << "  result: " << (doc.all_asserted_passed() ? "pass" : "fail") << '\n';
}

std::string render_json(const ReportDoc& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  for (const auto& [k, v] : doc.fields) j[k] = v;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : doc.checks) {
    const auto& r = c.report;
    nlohmann::ordered_json e;
    e["property"] = r.property;
    if (!c.subject.empty()) e["subject"] = c.subject;
    e["role"] = role_name(c.role);
    e["passed"] = r.passed;
    e["examined"] = r.examined;
    e["unit"] = r.unit;
    if (r.unit == "pairs") e["pairs_examined"] = r.examined;
    e["workers"] = r.workers;
    e["elapsed_ms"] = millis(r.elapsed);
    if (!r.detail.empty()) e["detail"] = r.detail;
    auto& w = e["witness"] = nlohmann::ordered_json::array();
    for (const auto& p : r.witness) w.push_back(p.to_string());
    checks.push_back(std::move(e));
  }
  j["result"] = doc.all_asserted_passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace capset::app
