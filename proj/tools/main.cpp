#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int run(int argc, char** argv) {
  using namespace capset::app;

  CLI::App app{"Build and exhaustively verify cap sets in AG(n,3)."};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--threads", g.threads, "Worker threads (default: CAPSET_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--naive", g.naive, "Use the brute-force oracle checks");
  app.add_flag("--skip-hypothesis-checks", g.skip_hypothesis_checks,
               "Do not verify construction hypotheses (unsafe)");
  app.add_flag("--allow-overlap", g.allow_overlap, "Let union() merge intersecting operands");
  app.add_flag("--progress", g.progress, "Print sweep progress to stderr");
  app.add_option("--report-json", g.report_json, "Also write the report as JSON to this path");

  std::string expr, out_path;
  auto* build = app.add_subcommand("build", "Evaluate a construction expression");
  build->add_option("expr", expr, "Construction expression")->required();
  build->add_option("-o,--output", out_path, "Output capset file")->required();

  std::string path;
  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Check properties of a capset file");
  verify->add_option("file", path)->required()->check(CLI::ExistingFile);
  verify->add_flag("--cap", vf.cap, "No three collinear points (default)");
  verify->add_flag("--complete", vf.complete, "Cap cannot be extended");
  verify->add_flag("--pset", vf.pset, "P-set");
  verify->add_flag("--saturated", vf.saturated, "b-saturated");
  verify->add_flag("--odd", vf.odd, "Odd P-set");
  verify->add_flag("--pset-complete", vf.pset_complete, "Complete P-set");
  verify->add_flag("--thmC", vf.thm_c, "Zero-support characterization");

  auto* info = app.add_subcommand("info", "Dimension, size and zero-count histogram");
  info->add_option("file", path)->required()->check(CLI::ExistingFile);

  std::string name, parity_text;
  bool preset_verify = false;
  auto* preset = app.add_subcommand("preset", "Build a named construction");
  preset->add_option("name", name, "ag15 | ag6-112")->required();
  preset->add_option("-o,--output", out_path, "Output capset file")->required();
  preset->add_option("--parity", parity_text, "ag6-112 parity: even | odd")
      ->check(CLI::IsMember({"even", "odd"}));
  preset->add_flag("--verify", preset_verify, "Also verify cap and completeness");

  std::string left, right;
  auto* diff = app.add_subcommand("diff", "Compare two capset files");
  diff->add_option("left", left)->required()->check(CLI::ExistingFile);
  diff->add_option("right", right)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const Io io{std::cout, std::cerr};
  if (*build) return cmd_build(expr, out_path, g, io);
  if (*verify) return cmd_verify(path, vf, g, io);
  if (*info) return cmd_info(path, g, io);
  if (*preset) {
    std::optional<capset::Parity> parity;
    if (!parity_text.empty()) {
      parity = parity_text == "odd" ? capset::Parity::kOdd : capset::Parity::kEven;
    }
    return cmd_preset(name, out_path, parity, preset_verify, g, io);
  }
  if (*diff) return cmd_diff(left, right, g, io);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
