#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <capset/constructions.hpp>

namespace capset::app {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct GlobalOptions {
  unsigned threads = 0;  // 0 = default_workers()
  bool naive = false;
  bool skip_hypothesis_checks = false;
  bool allow_overlap = false;
  bool progress = false;
  std::string report_json;  // empty = no JSON file
};

struct VerifyFlags {
  bool cap = false;
  bool complete = false;
  bool pset = false;
  bool saturated = false;
  bool odd = false;
  bool pset_complete = false;
  bool thm_c = false;

  bool any() const {
    return cap || complete || pset || saturated || odd || pset_complete || thm_c;
  }
};

// Streams the commands write to; `out` gets the report, `err` diagnostics.
struct Io {
  std::ostream& out;
  std::ostream& err;
};

const std::vector<std::string>& preset_names();

int cmd_build(const std::string& expr, const std::string& out_path, const GlobalOptions& g,
              Io io);
int cmd_verify(const std::string& path, VerifyFlags flags, const GlobalOptions& g, Io io);
int cmd_info(const std::string& path, const GlobalOptions& g, Io io);
int cmd_preset(const std::string& name, const std::string& out_path,
               std::optional<Parity> parity, bool verify, const GlobalOptions& g, Io io);
int cmd_diff(const std::string& a, const std::string& b, const GlobalOptions& g, Io io);

}  // namespace capset::app
