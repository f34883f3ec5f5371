#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <capset/capset_file.hpp>
#include <capset/constructions.hpp>
#include <capset/errors.hpp>
#include <capset/expr.hpp>
#include <capset/verifiers.hpp>

using namespace capset;

namespace {

PointSet S(std::initializer_list<const char*> rows) { return PointSet::from_strings(rows); }

ParseError parse_failure(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("accepted: " << text);
  return ParseError(ParseError::Kind::kSyntax, 0, "");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("capset_expr_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

const char* const kCorpus[] = {
    "P1",
    "P2",
    "B(3)",
    "Bp(4)",
    "Bpp(2)",
    "units(6)",
    "prod(P1,B(1))",
    "prod(P1, P2, B(2))",
    "union(prod(P1,B(1)),load(\"x.caps\"))",
    "three(P1,P1,P1)",
    " three ( P1 , P2 , P1 ) ",
    "six(P1,P1,P1,P1,P1,P1)",
    "five(six(P1,P1,P1,P1,P1,P1),mirror(six(P1,P1,P1,P1,P1,P1)),units(6),three(P1,P1,P1),"
    "six(P1,P1,P1,P1,P1,P1),mirror(six(P1,P1,P1,P1,P1,P1)),units(6))",
    "mirror(three(P2,P1,P1))",
    "tD(six(P1,P1,P1,P1,P1,P1),odd)",
    "tD(P1, even)",
    "double(load(\"pg 23.caps\"))",
    "load(\"a\\\"b.caps\")",
};

}  // namespace

TEST_CASE("parse examples") {
  const auto t = parse_expr("three(P1,P1,P1)");
  CHECK(t.kind == ExprKind::kThree);
  REQUIRE(t.children.size() == 3);
  for (const auto& c : t.children) CHECK(c.kind == ExprKind::kP1);

  const auto u = parse_expr("union(prod(P1,B(1)),load(\"x.caps\"))");
  CHECK(u.kind == ExprKind::kUnion);
  REQUIRE(u.children.size() == 2);
  CHECK(u.children[0].kind == ExprKind::kProd);
  CHECK(u.children[0].children[1].int_arg == 1);
  CHECK(u.children[1].kind == ExprKind::kLoad);
  CHECK(u.children[1].path == "x.caps");
}

TEST_CASE("parse errors carry kind and offset") {
  const auto arity = parse_failure("three(P1,P1)");
  CHECK(arity.kind() == ParseError::Kind::kArity);
  CHECK(arity.offset() == 11);

  const auto unknown = parse_failure("prod(P1,Q7)");
  CHECK(unknown.kind() == ParseError::Kind::kUnknownIdentifier);
  CHECK(unknown.offset() == 8);

  CHECK(parse_failure("").kind() == ParseError::Kind::kSyntax);
  CHECK(parse_failure("three(P1,P1,P1").kind() == ParseError::Kind::kSyntax);
  CHECK(parse_failure("P1 P1").offset() == 3);
  CHECK(parse_failure("B(x)").kind() == ParseError::Kind::kUnknownIdentifier);
  CHECK(parse_failure("B()").kind() == ParseError::Kind::kArity);
  CHECK(parse_failure("B(0)").kind() == ParseError::Kind::kSyntax);
  CHECK(parse_failure("load(x)").kind() == ParseError::Kind::kUnknownIdentifier);
  CHECK(parse_failure("load(P1)").kind() == ParseError::Kind::kSyntax);
  CHECK(parse_failure("load(\"x)").kind() == ParseError::Kind::kSyntax);
  CHECK(parse_failure("tD(P1,maybe)").kind() == ParseError::Kind::kUnknownIdentifier);
  CHECK(parse_failure("prod(P1)").kind() == ParseError::Kind::kArity);
  CHECK(parse_failure("six(P1,P1,P1,P1,P1)").kind() == ParseError::Kind::kArity);
  CHECK(parse_failure("five(P1,P1,P1,P1,P1,P1)").kind() == ParseError::Kind::kArity);
  CHECK(parse_failure("mirror(P1,P1)").kind() == ParseError::Kind::kArity);
}

TEST_CASE("print then parse is the identity") {
  for (const char* text : kCorpus) {
    CAPTURE(text);
    const auto e = parse_expr(text);
    const auto printed = print_expr(e);
    CHECK(parse_expr(printed) == e);
    CHECK(print_expr(parse_expr(printed)) == printed);
  }
}

TEST_CASE("evaluation examples") {
  CHECK(eval_expr("three(P1,P1,P1)") == S({"001", "002", "010", "020", "100", "200"}));
  CHECK(eval_expr("six(P1,P1,P1,P1,P1,P1)").size() == 80);
  CHECK(eval_expr("prod(P1,B(1))") == seed_P(2));
  CHECK(eval_expr("units(3)") == unit_pset(3));
  CHECK(eval_expr("Bp(2)") == gen_B_parity(2, Parity::kEven));
  CHECK(eval_expr("Bpp(2)") == gen_B_parity(2, Parity::kOdd));
  CHECK(eval_expr("tD(six(P1,P1,P1,P1,P1,P1),odd)") == preset_ag6_112(Parity::kOdd));
  CHECK(eval_expr("mirror(mirror(three(P2,P1,P1)))") ==
        three_construction(seed_P(2), seed_P(1), seed_P(1)));
}

TEST_CASE("five evaluates the AG(15,3) instance") {
  EvalOptions opts;
  opts.checks.completeness = false;
  const std::string six = "six(P1,P1,P1,P1,P1,P1)";
  const std::string text = "five(" + six + ",mirror(" + six + "),units(6),three(P1,P1,P1)," + six +
                           ",mirror(" + six + "),units(6))";
  CHECK(eval_expr(text, opts) == preset_ag15());
}

TEST_CASE("load and double") {
  TempDir dir;
  write_capset(S({"100", "010", "001", "111"}), dir.path / "pg23.caps");
  EvalOptions opts;
  opts.base_dir = dir.path;
  const auto d = eval_expr("double(load(\"pg23.caps\"))", opts);
  CHECK(d.size() == 8);
  CHECK(d.dim() == 3);
  CHECK(is_cap_naive(d).passed);
  CHECK(eval_expr("load(\"" + (dir.path / "pg23.caps").string() + "\")").size() == 4);
  CHECK_THROWS_AS(eval_expr("load(\"missing.caps\")", opts), EvalError);
}

TEST_CASE("union disjointness") {
  CHECK(eval_expr("union(prod(P1,B(1)),prod(B(1),P1))").size() == 4);
  CHECK_THROWS_AS(eval_expr("union(P2,prod(P1,B(1)))"), EvalError);
  EvalOptions opts;
  opts.allow_overlap = true;
  CHECK(eval_expr("union(P2,prod(P1,B(1)))", opts) == seed_P(2));
  CHECK_THROWS_AS(eval_expr("union(P1,P2)", opts), EvalError);
}

TEST_CASE("evaluation errors name the failing node") {
  try {
    eval_expr("prod(P1,three(P1,B(1),P1))");
    FAIL("expected an error");
  } catch (const EvalError& e) {
    CHECK(e.node_path() == "prod/2:three");
  }
  try {
    eval_expr("mirror(tD(units(5),even))");
    FAIL("expected an error");
  } catch (const EvalError& e) {
    CHECK(e.node_path() == "mirror/1:tD");
  }
}

TEST_CASE("evaluation is deterministic") {
  for (const char* text : {"six(P1,P2,P1,P1,P1,P1)", "three(P2,P2,P2)", "tD(P1,odd)"}) {
    CHECK(eval_expr(text) == eval_expr(text));
    Evaluator ev;
    CHECK(ev.eval(std::string_view(text)) == ev.eval(std::string_view(text)));
  }
}
