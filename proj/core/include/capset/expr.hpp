#pragma once

// Construction expressions.
//
//   expr := "P1" | "P2" | "B(" int ")" | "Bp(" int ")" | "Bpp(" int ")"
//         | "units(" int ")"
//         | "prod(" expr {"," expr}+ ")" | "union(" expr {"," expr}+ ")"
//         | "three(" expr "," expr "," expr ")" | "six(" expr {"," expr}x5 ")"
//         | "five(" expr x7 ")"       operands: Pn1, Pn2, Pn3, Pk, Pm1, Pm2, Pm3
//         | "mirror(" expr ")" | "tD(" expr "," ("even"|"odd") ")"
//         | "double(" expr ")" | "load(" quoted-path ")"
//
// Whitespace is allowed between tokens.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "capset/constructions.hpp"
#include "capset/errors.hpp"
#include "capset/point_set.hpp"

namespace capset {

enum class ExprKind {
  kP1, kP2, kB, kBp, kBpp, kUnits,
  kProd, kUnion, kThree, kSix, kFive,
  kMirror, kTheoremD, kDouble, kLoad,
};

struct ExprNode {
  ExprKind kind = ExprKind::kP1;
  std::size_t offset = 0;  // byte offset of the operator name
  int int_arg = 0;         // B, Bp, Bpp, units
  Parity parity = Parity::kEven;  // tD
  std::string path;        // load
  std::vector<ExprNode> children;

  // Structural: offsets are ignored.
  friend bool operator==(const ExprNode& a, const ExprNode& b) {
    return a.kind == b.kind && a.int_arg == b.int_arg && a.parity == b.parity &&
           a.path == b.path && a.children == b.children;
  }
};

std::string_view name_of(ExprKind kind);

class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kUnknownIdentifier, kArity };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : Error(kind_name(kind) + " at offset " + std::to_string(offset) + ": " + what),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  static std::string kind_name(Kind k) {
    switch (k) {
      case Kind::kSyntax:
        return "syntax error";
      case Kind::kUnknownIdentifier:
        return "unknown identifier";
      case Kind::kArity:
        return "arity error";
    }
    return "parse error";
  }

  Kind kind_;
  std::size_t offset_;
};

ExprNode parse_expr(std::string_view text);

// Canonical text: no whitespace, paths re-quoted. parse(print(e)) == e up to
// offsets.
std::string print_expr(const ExprNode& e);

// An evaluation failure with the path from the root to the failing node,
// e.g. "five/4:three/2:P1".
class EvalError : public Error {
 public:
  EvalError(std::string node_path, const std::string& cause)
      : Error("at " + node_path + ": " + cause), node_path_(std::move(node_path)) {}

  const std::string& node_path() const noexcept { return node_path_; }

 private:
  std::string node_path_;
};

struct EvalOptions {
  bool allow_overlap = false;  // union of intersecting operands
  HypothesisChecks checks;     // five and tD
  std::filesystem::path base_dir;  // relative load() paths resolve here
};

// Evaluates expressions, memoizing identical subexpressions by their
// canonical text.
class Evaluator {
 public:
  explicit Evaluator(EvalOptions opts = {}) : opts_(std::move(opts)) {}

  PointSet eval(const ExprNode& e);
  PointSet eval(std::string_view text) { return eval(parse_expr(text)); }

 private:
  PointSet eval_at(const ExprNode& e, const std::string& path);
  PointSet eval_node(const ExprNode& e, const std::string& path);

  EvalOptions opts_;
  std::map<std::string, PointSet, std::less<>> memo_;
};

PointSet eval_expr(std::string_view text, const EvalOptions& opts = {});

}  // namespace capset
