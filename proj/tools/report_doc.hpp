#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <capset/report.hpp>

namespace capset::app {

// How a check's outcome feeds the exit status.
enum class CheckRole {
  kAsserted,  // failure makes the command exit 1
  kReported,  // outcome printed only
};

struct CheckEntry {
  VerifyReport report;
  CheckRole role = CheckRole::kAsserted;
  std::string subject;  // which set the check ran on, e.g. "P6^3"
};

// Everything a command wants to put on record. Rendered as indented
// key/value text or as JSON.
struct ReportDoc {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<CheckEntry> checks;

  void add_field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void add(VerifyReport r, std::string subject = {}, CheckRole role = CheckRole::kAsserted) {
    checks.push_back({std::move(r), role, std::move(subject)});
  }

  bool all_asserted_passed() const;
};

void render_text(const ReportDoc& doc, std::ostream& out);
std::string render_json(const ReportDoc& doc);

}  // namespace capset::app
