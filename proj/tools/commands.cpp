#include "commands.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <capset/capset_file.hpp>
#include <capset/errors.hpp>
#include <capset/expr.hpp>
#include <capset/sweep.hpp>
#include <capset/verifiers.hpp>

#include "report_doc.hpp"

namespace capset::app {
namespace {

VerifyOptions verify_options(const GlobalOptions& g, Io io) {
  VerifyOptions o;
  o.workers = g.threads;
  o.path = g.naive ? CheckPath::kNaive : CheckPath::kAuto;
  o.progress = g.progress ? &io.err : nullptr;
  return o;
}

// Writes the text report to io.out and, if requested, the JSON file.
// Returns the exit code the report implies.
int emit(const ReportDoc& doc, const GlobalOptions& g, Io io) {
  render_text(doc, io.out);
  if (!g.report_json.empty()) {
    std::ofstream f(g.report_json, std::ios::binary | std::ios::trunc);
    if (!f) throw FileFormatError(FileErrorKind::kIo, 0, "cannot open " + g.report_json);
    f << render_json(doc);
    if (!f) throw FileFormatError(FileErrorKind::kIo, 0, "write failed: " + g.report_json);
  }
  return doc.all_asserted_passed() ? kExitPass : kExitFail;
}

template <typename Fn>
int guarded(Io io, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
  } catch (const FileFormatError& e) {
    io.err << "error: " << e.what() << '\n';
  } catch (const EvalError& e) {
    io.err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
  } catch (const std::bad_alloc&) {
    io.err << "error: out of memory\n";
  }
  return kExitUsage;
}

// pset-complete is only defined on P-sets; report the P-set failure instead
// of throwing.
VerifyReport pset_complete_report(const PointSet& s, const VerifyOptions& o) {
  auto ps = is_pset(s, o);
  if (!ps.passed) {
    ps.property = "pset-complete";
    ps.detail = "not a P-set: " + ps.detail;
    return ps;
  }
  return is_complete_pset(s, o);
}

std::string join_sizes(const std::array<PointSet, 5>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += '/';
    out += std::to_string(b.size());
  }
  return out;
}

VerifyReport blocks_disjoint_report(const std::array<PointSet, 5>& blocks) {
  VerifyReport r;
  r.property = "blocks-disjoint";
  r.unit = "block pairs";
  r.passed = true;
  for (std::size_t i = 0; i < blocks.size() && r.passed; ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      ++r.examined;
      const auto common = set_intersection(blocks[i], blocks[j]);
      if (!common.empty()) {
        r.passed = false;
        r.witness = {common[0]};
        r.detail = "C" + std::to_string(i + 1) + " and C" + std::to_string(j + 1);
        break;
      }
    }
  }
  return r;
}

void add_cap_complete(ReportDoc& doc, const PointSet& s, const VerifyOptions& o,
                      const std::string& subject) {
  auto both = verify_cap_complete(s, o);
  doc.add(std::move(both.cap), subject);
  doc.add(std::move(both.complete), subject);
}

int preset_ag15(const std::string& out_path, bool verify, const GlobalOptions& g, Io io) {
  const auto o = verify_options(g, io);
  const auto parts = ag15_parts();
  HypothesisChecks checks;
  checks.completeness = false;  // reported below
  if (g.skip_hypothesis_checks) checks = HypothesisChecks::none();
  const auto res = five_block_blocks(parts.inputs(), checks);
  write_capset(res.set, std::filesystem::path(out_path));

  ReportDoc doc;
  doc.command = "preset";
  doc.add_field("preset", "ag15");
  doc.add_field("output", out_path);
  doc.add_field("dim", std::to_string(res.set.dim()));
  doc.add_field("size", std::to_string(res.set.size()));
  doc.add_field("blocks", join_sizes(res.blocks));
  doc.add_field("hypothesis_checks", g.skip_hypothesis_checks ? "skipped" : "performed");
  doc.add(blocks_disjoint_report(res.blocks), "C1..C5");

  const std::array<std::pair<const PointSet*, const char*>, 4> inputs{{
      {&parts.p3, "P3"}, {&parts.p6_1, "P6^1"}, {&parts.p6_2, "P6^2"}, {&parts.p6_3, "P6^3"}}};
  for (const auto& [set, name] : inputs) {
    doc.add(is_pset(*set, o), name);
    doc.add(is_b_saturated(*set), name);
  }
  for (const auto& [set, name] : inputs) {
    // The unit set is not required to pass; its outcome is only reported.
    const auto role = set == &parts.p6_3 ? CheckRole::kReported : CheckRole::kAsserted;
    doc.add(pset_complete_report(*set, o), name, role);
  }
  const auto p12 = set_union(parts.p6_1, parts.p6_2);
  for (const char* side : {"n", "m"}) {
    const std::string s = side;
    doc.add(check_condition1(parts.p6_1, parts.p6_2, parts.p6_3), s + ": P6^1,P6^2,P6^3");
    doc.add(check_condition2(parts.p6_1, parts.p6_3), s + ": P6^1,P6^3");
    doc.add(check_condition2(parts.p6_2, parts.p6_3), s + ": P6^2,P6^3");
    doc.add(check_condition3(p12, parts.p6_3), s + ": P6^1+P6^2,P6^3");
  }
  if (verify) add_cap_complete(doc, res.set, o, "C");
  return emit(doc, g, io);
}

int preset_ag6(const std::string& out_path, std::optional<Parity> parity, bool verify,
               const GlobalOptions& g, Io io) {
  const auto o = verify_options(g, io);
  const Parity par = parity.value_or(Parity::kEven);
  const auto p6 = ag15_parts().p6_1;
  const auto checks = g.skip_hypothesis_checks ? HypothesisChecks::none() : HypothesisChecks{};
  const auto set = theoremD_cap(p6, par, checks);
  write_capset(set, std::filesystem::path(out_path));

  ReportDoc doc;
  doc.command = "preset";
  doc.add_field("preset", "ag6-112");
  doc.add_field("parity", to_string(par));
  doc.add_field("output", out_path);
  doc.add_field("dim", std::to_string(set.dim()));
  doc.add_field("size", std::to_string(set.size()));
  doc.add_field("hypothesis_checks", g.skip_hypothesis_checks ? "skipped" : "performed");
  doc.add(is_pset(p6, o), "P6");
  doc.add(is_b_saturated(p6), "P6");
  doc.add(pset_complete_report(p6, o), "P6");
  doc.add(is_odd_pset(p6), "P6");
  if (verify) add_cap_complete(doc, set, o, "C");
  return emit(doc, g, io);
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"ag15", "ag6-112"};
  return names;
}

int cmd_build(const std::string& expr, const std::string& out_path, const GlobalOptions& g,
              Io io) {
  return guarded(io, [&] {
    EvalOptions eo;
    eo.allow_overlap = g.allow_overlap;
    if (g.skip_hypothesis_checks) eo.checks = HypothesisChecks::none();
    eo.base_dir = std::filesystem::current_path();
    const auto node = parse_expr(expr);
    const auto set = Evaluator(eo).eval(node);
    write_capset(set, std::filesystem::path(out_path));

    ReportDoc doc;
    doc.command = "build";
    doc.add_field("expr", print_expr(node));
    doc.add_field("output", out_path);
    doc.add_field("dim", std::to_string(set.dim()));
    doc.add_field("size", std::to_string(set.size()));
    return emit(doc, g, io);
  });
}

int cmd_verify(const std::string& path, VerifyFlags flags, const GlobalOptions& g, Io io) {
  return guarded(io, [&] {
    if (!flags.any()) flags.cap = true;
    const auto set = read_capset(std::filesystem::path(path)).with_membership();
    const auto o = verify_options(g, io);

    ReportDoc doc;
    doc.command = "verify";
    doc.add_field("input", path);
    doc.add_field("dim", std::to_string(set.dim()));
    doc.add_field("size", std::to_string(set.size()));
    if (flags.complete) {
      // One sweep answers both.
      auto both = verify_cap_complete(set, o);
      if (flags.cap) doc.add(std::move(both.cap));
      doc.add(std::move(both.complete));
    } else if (flags.cap) {
      doc.add(is_cap(set, o));
    }
    if (flags.pset) doc.add(is_pset(set, o));
    if (flags.saturated) doc.add(is_b_saturated(set));
    if (flags.odd) doc.add(is_odd_pset(set));
    if (flags.pset_complete) doc.add(pset_complete_report(set, o));
    if (flags.thm_c) doc.add(theoremC_characterization(set));
    return emit(doc, g, io);
  });
}

int cmd_info(const std::string& path, const GlobalOptions& g, Io io) {
  return guarded(io, [&] {
    const auto set = read_capset(std::filesystem::path(path));
    std::map<int, std::size_t> hist;
    for (const auto& p : set) ++hist[p.zero_count()];
    io.out << "info:\n";
    io.out << "  input: " << path << '\n';
    io.out << "  dim: " << set.dim() << '\n';
    io.out << "  size: " << set.size() << '\n';
    io.out << "  zero_count_histogram:\n";
    for (const auto& [zeros, count] : hist) io.out << "    " << zeros << ": " << count << '\n';
    (void)g;
    return kExitPass;
  });
}

int cmd_preset(const std::string& name, const std::string& out_path,
               std::optional<Parity> parity, bool verify, const GlobalOptions& g, Io io) {
  return guarded(io, [&] {
    if (name == "ag15") {
      if (parity) throw InvalidInputError("preset ag15 takes no parity");
      return preset_ag15(out_path, verify, g, io);
    }
    if (name == "ag6-112") return preset_ag6(out_path, parity, verify, g, io);
    std::string valid;
    for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw InvalidInputError("unknown preset '" + name + "'; valid presets: " + valid);
  });
}

int cmd_diff(const std::string& a, const std::string& b, const GlobalOptions& g, Io io) {
  return guarded(io, [&] {
    const auto sa = read_capset(std::filesystem::path(a));
    const auto sb = read_capset(std::filesystem::path(b));
    io.out << "diff:\n";
    io.out << "  left: " << a << " (n=" << sa.dim() << " size=" << sa.size() << ")\n";
    io.out << "  right: " << b << " (n=" << sb.dim() << " size=" << sb.size() << ")\n";
    if (sa.dim() != sb.dim()) {
      io.out << "  identical: false\n  reason: dimension mismatch\n";
      return kExitFail;
    }
    const auto only_a = set_difference(sa, sb);
    const auto only_b = set_difference(sb, sa);
    constexpr std::size_t kShow = 10;
    const auto list = [&](const char* key, const PointSet& s) {
      io.out << "  " << key << ": " << s.size() << '\n';
      if (s.empty()) return;
      io.out << "  " << key << "_first:\n";
      for (std::size_t i = 0; i < std::min(s.size(), kShow); ++i) {
        io.out << "    - " << s[i].to_string() << '\n';
      }
    };
    list("only_left", only_a);
    list("only_right", only_b);
    const bool same = only_a.empty() && only_b.empty();
    io.out << "  identical: " << (same ? "true" : "false") << '\n';
    (void)g;
    return same ? kExitPass : kExitFail;
  });
}

}  // namespace capset::app
