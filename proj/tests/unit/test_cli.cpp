#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <capset/capset_file.hpp>
#include <capset/constructions.hpp>

#include "commands.hpp"

using namespace capset;
using namespace capset::app;

namespace {

struct Fixture {
  std::filesystem::path dir;
  std::ostringstream out, err;
  GlobalOptions g;

  Fixture() {
    dir = std::filesystem::temp_directory_path() /
          ("capset_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(dir);
    g.threads = 2;
  }
  ~Fixture() { std::filesystem::remove_all(dir); }

  Io io() { return {out, err}; }
  std::string file(const char* name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "build writes the canonical file") {
  CHECK(cmd_build("three(P1,P1,P1)", file("p3.caps"), g, io()) == kExitPass);
  CHECK(slurp(file("p3.caps")) == "capset/1 n=3 size=6\n001\n002\n010\n020\n100\n200\n");
  CHECK(out.str().find("size: 6") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "build errors exit 2") {
  CHECK(cmd_build("three(P1,P1)", file("x.caps"), g, io()) == kExitUsage);
  CHECK(err.str().find("arity error at offset 11") != std::string::npos);
  CHECK(cmd_build("union(P2,P2)", file("x.caps"), g, io()) == kExitUsage);
  CHECK(cmd_build("load(\"/nonexistent.caps\")", file("x.caps"), g, io()) == kExitUsage);
  CHECK_FALSE(std::filesystem::exists(file("x.caps")));
}

TEST_CASE_FIXTURE(Fixture, "verify exit codes") {
  REQUIRE(cmd_build("B(6)", file("b6.caps"), g, io()) == kExitPass);
  VerifyFlags pset;
  pset.pset = true;
  CHECK(cmd_verify(file("b6.caps"), pset, g, io()) == kExitFail);

  REQUIRE(cmd_build("six(P1,P1,P1,P1,P1,P1)", file("p6.caps"), g, io()) == kExitPass);
  VerifyFlags props;
  props.pset = props.saturated = props.pset_complete = props.odd = props.thm_c = true;
  CHECK(cmd_verify(file("p6.caps"), props, g, io()) == kExitPass);

  VerifyFlags none;
  CHECK(cmd_verify(file("missing.caps"), none, g, io()) == kExitUsage);
  std::ofstream(file("bad.caps")) << "capset/1 n=2 size=1\n0x\n";
  CHECK(cmd_verify(file("bad.caps"), none, g, io()) == kExitUsage);
  CHECK(err.str().find("line 2") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "verify reports witnesses in text and JSON") {
  write_capset(PointSet::from_strings({"00", "01", "02"}), std::filesystem::path(file("l.caps")));
  g.report_json = file("r.json");
  VerifyFlags f;
  f.cap = f.complete = true;
  CHECK(cmd_verify(file("l.caps"), f, g, io()) == kExitFail);
  CHECK(out.str().find("        - 00\n        - 01\n        - 02\n") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(file("r.json")));
  CHECK(j["result"] == "fail");
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["property"] == "cap");
  CHECK(j["checks"][0]["witness"] == nlohmann::json::array({"00", "01", "02"}));
  CHECK(j["checks"][1]["property"] == "complete");
  CHECK(j["checks"][1]["passed"] == false);
}

TEST_CASE_FIXTURE(Fixture, "naive and fast verify agree") {
  REQUIRE(cmd_preset("ag6-112", file("c.caps"), Parity::kOdd, false, g, io()) == kExitPass);
  VerifyFlags f;
  f.cap = f.complete = true;
  g.report_json = file("fast.json");
  CHECK(cmd_verify(file("c.caps"), f, g, io()) == kExitPass);
  g.naive = true;
  g.report_json = file("naive.json");
  CHECK(cmd_verify(file("c.caps"), f, g, io()) == kExitPass);
  const auto a = nlohmann::json::parse(slurp(file("fast.json")));
  const auto b = nlohmann::json::parse(slurp(file("naive.json")));
  CHECK(a["checks"][0]["unit"] == "pairs");
  CHECK(a["checks"][0]["examined"] == 6216);
  CHECK(b["checks"][0]["unit"] == "triples");
}

TEST_CASE_FIXTURE(Fixture, "preset names") {
  CHECK(cmd_preset("bogus", file("x.caps"), std::nullopt, false, g, io()) == kExitUsage);
  CHECK(err.str().find("ag15") != std::string::npos);
  CHECK(err.str().find("ag6-112") != std::string::npos);
  CHECK(cmd_preset("ag6-112", file("e.caps"), std::nullopt, true, g, io()) == kExitPass);
  CHECK(read_capset(std::filesystem::path(file("e.caps"))) == preset_ag6_112(Parity::kEven));
}

TEST_CASE_FIXTURE(Fixture, "preset ag15 reports every hypothesis") {
  g.report_json = file("r.json");
  CHECK(cmd_preset("ag15", file("ag15.caps"), std::nullopt, false, g, io()) == kExitPass);
  CHECK(read_capset(std::filesystem::path(file("ag15.caps"))).size() == 124928);
  const auto j = nlohmann::json::parse(slurp(file("r.json")));
  CHECK(j["size"] == "124928");
  CHECK(j["blocks"] == "30720/30720/51200/6144/6144");
  bool saw_unit = false;
  int conditions = 0;
  for (const auto& c : j["checks"]) {
    if (c["property"] == "pset-complete" && c["subject"] == "P6^3") {
      saw_unit = true;
      CHECK(c["role"] == "reported");
      if (c["passed"] == false) CHECK_FALSE(c["witness"].empty());
    } else {
      CHECK(c["role"] == "asserted");
      CHECK(c["passed"] == true);
    }
    if (c["property"].get<std::string>().rfind("condition", 0) == 0) ++conditions;
  }
  CHECK(saw_unit);
  CHECK(conditions == 8);
}

TEST_CASE_FIXTURE(Fixture, "info and diff") {
  REQUIRE(cmd_build("three(P1,P1,P1)", file("a.caps"), g, io()) == kExitPass);
  REQUIRE(cmd_build("mirror(three(P1,P1,P1))", file("b.caps"), g, io()) == kExitPass);
  REQUIRE(cmd_build("prod(P2,B(1))", file("u.caps"), g, io()) == kExitPass);
  out.str("");
  CHECK(cmd_info(file("a.caps"), g, io()) == kExitPass);
  CHECK(out.str().find("    2: 6\n") != std::string::npos);
  CHECK(cmd_diff(file("a.caps"), file("b.caps"), g, io()) == kExitPass);
  out.str("");
  CHECK(cmd_diff(file("a.caps"), file("u.caps"), g, io()) == kExitFail);
  CHECK(out.str().find("only_left: 6") != std::string::npos);
}
