#include "capset/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <variant>

#include "capset/capset_file.hpp"

namespace capset {
namespace {

struct OpInfo {
  std::string_view name;
  ExprKind kind;
  // Operand count; max == -1 means unbounded.
  int min_args;
  int max_args;
  bool takes_parens;
};

constexpr std::array<OpInfo, 15> kOps{{
    {"P1", ExprKind::kP1, 0, 0, false},
    {"P2", ExprKind::kP2, 0, 0, false},
    {"B", ExprKind::kB, 1, 1, true},
    {"Bp", ExprKind::kBp, 1, 1, true},
    {"Bpp", ExprKind::kBpp, 1, 1, true},
    {"units", ExprKind::kUnits, 1, 1, true},
    {"prod", ExprKind::kProd, 2, -1, true},
    {"union", ExprKind::kUnion, 2, -1, true},
    {"three", ExprKind::kThree, 3, 3, true},
    {"six", ExprKind::kSix, 6, 6, true},
    {"five", ExprKind::kFive, 7, 7, true},
    {"mirror", ExprKind::kMirror, 1, 1, true},
    {"tD", ExprKind::kTheoremD, 2, 2, true},
    {"double", ExprKind::kDouble, 1, 1, true},
    {"load", ExprKind::kLoad, 1, 1, true},
}};

const OpInfo* find_op(std::string_view name) {
  for (const auto& op : kOps) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

const OpInfo& info(ExprKind kind) {
  for (const auto& op : kOps) {
    if (op.kind == kind) return op;
  }
  throw Error("unknown expression kind");
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// One raw argument before the operator decides what it should be.
struct RawArg {
  std::size_t offset = 0;
  std::variant<ExprNode, long long, std::string /*word*/, std::filesystem::path /*quoted*/> value;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprNode parse() {
    ExprNode e = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(ParseError::Kind::kSyntax, pos_, "expected end of input");
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c, std::string_view what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(ParseError::Kind::kSyntax, pos_,
                       "expected " + std::string(what));
    }
    ++pos_;
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  RawArg arg() {
    skip_ws();
    RawArg a;
    a.offset = pos_;
    if (pos_ >= text_.size()) {
      throw ParseError(ParseError::Kind::kSyntax, pos_, "expected an operand");
    }
    const char c = text_[pos_];
    if (c == '"') {
      a.value = std::filesystem::path(quoted());
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      a.value = integer();
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t save = pos_;
      const auto w = word();
      if (find_op(w) == nullptr && (w == "even" || w == "odd")) {
        a.value = std::string(w);
      } else {
        pos_ = save;
        a.value = expr();
      }
    } else {
      throw ParseError(ParseError::Kind::kSyntax, pos_, "expected an operand");
    }
    return a;
  }

  long long integer() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      throw ParseError(ParseError::Kind::kSyntax, start, "malformed integer");
    }
    return v;
  }

  std::string quoted() {
    const std::size_t start = pos_;
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) {
      throw ParseError(ParseError::Kind::kSyntax, start, "unterminated string");
    }
    ++pos_;  // closing quote
    return out;
  }

  ExprNode expr() {
    skip_ws();
    const std::size_t start = pos_;
    const auto name = word();
    if (name.empty()) {
      throw ParseError(ParseError::Kind::kSyntax, start, "expected an expression");
    }
    const OpInfo* op = find_op(name);
    if (op == nullptr) {
      throw ParseError(ParseError::Kind::kUnknownIdentifier, start,
                       "'" + std::string(name) + "'");
    }
    ExprNode node;
    node.kind = op->kind;
    node.offset = start;
    if (!op->takes_parens) return node;

    expect('(', "'(' after " + std::string(name));
    std::vector<RawArg> args;
    if (!peek(')')) {
      args.push_back(arg());
      while (peek(',')) {
        ++pos_;
        args.push_back(arg());
      }
    }
    skip_ws();
    const std::size_t close = pos_;
    expect(')', "',' or ')'");
    const int count = static_cast<int>(args.size());
    if (count < op->min_args || (op->max_args >= 0 && count > op->max_args)) {
      std::string want = op->max_args < 0 ? "at least " + std::to_string(op->min_args)
                                           : std::to_string(op->min_args);
      throw ParseError(ParseError::Kind::kArity, close,
                       std::string(name) + " takes " + want + " operand(s), got " +
                           std::to_string(count));
    }
    bind(node, *op, args);
    return node;
  }

  void bind(ExprNode& node, const OpInfo& op, std::vector<RawArg>& args) {
    auto need_int = [&](RawArg& a) {
      if (auto* v = std::get_if<long long>(&a.value)) {
        if (*v < 1 || *v > kMaxPointDim) {
          throw ParseError(ParseError::Kind::kSyntax, a.offset,
                           std::string(op.name) + ": dimension out of range");
        }
        return static_cast<int>(*v);
      }
      throw ParseError(ParseError::Kind::kSyntax, a.offset,
                       std::string(op.name) + " expects an integer");
    };
    switch (op.kind) {
      case ExprKind::kB:
      case ExprKind::kBp:
      case ExprKind::kBpp:
      case ExprKind::kUnits:
        node.int_arg = need_int(args[0]);
        return;
      case ExprKind::kLoad:
        if (auto* p = std::get_if<std::filesystem::path>(&args[0].value)) {
          node.path = p->string();
          return;
        }
        throw ParseError(ParseError::Kind::kSyntax, args[0].offset, "load expects a quoted path");
      case ExprKind::kTheoremD: {
        node.children.push_back(need_expr(args[0], op));
        auto* w = std::get_if<std::string>(&args[1].value);
        if (w == nullptr) {
          throw ParseError(ParseError::Kind::kSyntax, args[1].offset, "tD expects even or odd");
        }
        node.parity = *w == "even" ? Parity::kEven : Parity::kOdd;
        return;
      }
      default:
        for (auto& a : args) node.children.push_back(need_expr(a, op));
        return;
    }
  }

  ExprNode need_expr(RawArg& a, const OpInfo& op) {
    if (auto* e = std::get_if<ExprNode>(&a.value)) return std::move(*e);
    if (std::holds_alternative<std::string>(a.value)) {
      throw ParseError(ParseError::Kind::kUnknownIdentifier, a.offset,
                       std::string(op.name) + " expects an expression, got a keyword");
    }
    throw ParseError(ParseError::Kind::kSyntax, a.offset,
                     std::string(op.name) + " expects an expression");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view name_of(ExprKind kind) { return info(kind).name; }

ExprNode parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const ExprNode& e) {
  std::string out(name_of(e.kind));
  switch (e.kind) {
    case ExprKind::kP1:
    case ExprKind::kP2:
      return out;
    case ExprKind::kB:
    case ExprKind::kBp:
    case ExprKind::kBpp:
    case ExprKind::kUnits:
      return out + "(" + std::to_string(e.int_arg) + ")";
    case ExprKind::kLoad:
      return out + "(" + quote(e.path) + ")";
    case ExprKind::kTheoremD:
      return out + "(" + print_expr(e.children.at(0)) + "," + to_string(e.parity) + ")";
    default:
      break;
  }
  out += '(';
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += ',';
    out += print_expr(e.children[i]);
  }
  out += ')';
  return out;
}

PointSet Evaluator::eval(const ExprNode& e) { return eval_at(e, std::string(name_of(e.kind))); }

PointSet Evaluator::eval_at(const ExprNode& e, const std::string& path) {
  const std::string key = print_expr(e);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  PointSet result;
  try {
    result = eval_node(e, path);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& err) {
    throw EvalError(path, err.what());
  }
  memo_.emplace(key, result);
  return result;
}

PointSet Evaluator::eval_node(const ExprNode& e, const std::string& path) {
  std::vector<PointSet> ops;
  ops.reserve(e.children.size());
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    const auto& c = e.children[i];
    ops.push_back(eval_at(c, path + "/" + std::to_string(i + 1) + ":" + std::string(name_of(c.kind))));
  }
  switch (e.kind) {
    case ExprKind::kP1:
      return seed_P(1);
    case ExprKind::kP2:
      return seed_P(2);
    case ExprKind::kB:
      return gen_B(e.int_arg);
    case ExprKind::kBp:
      return gen_B_parity(e.int_arg, Parity::kEven);
    case ExprKind::kBpp:
      return gen_B_parity(e.int_arg, Parity::kOdd);
    case ExprKind::kUnits:
      return unit_pset(e.int_arg);
    case ExprKind::kProd:
      return product(ops);
    case ExprKind::kUnion: {
      PointSet acc = ops[0];
      for (std::size_t i = 1; i < ops.size(); ++i) {
        if (ops[i].dim() != acc.dim()) {
          throw DimensionError("union operands have dimensions " + std::to_string(acc.dim()) +
                               " and " + std::to_string(ops[i].dim()));
        }
        if (!opts_.allow_overlap && !disjoint(acc, ops[i])) {
          throw InvalidInputError("union operand " + std::to_string(i + 1) +
                                  " overlaps earlier operands (pass --allow-overlap to permit)");
        }
        acc = set_union(acc, ops[i]);
      }
      return acc;
    }
    case ExprKind::kThree:
      return three_construction(ops[0], ops[1], ops[2]);
    case ExprKind::kSix:
      return six_construction(ops);
    case ExprKind::kFive:
      return five_block(FiveBlockInputs{ops[0], ops[1], ops[2], ops[3], ops[4], ops[5], ops[6]},
                        opts_.checks);
    case ExprKind::kMirror:
      return mirror_set(ops[0]);
    case ExprKind::kTheoremD:
      return theoremD_cap(ops[0], e.parity, opts_.checks);
    case ExprKind::kDouble:
      return doubling(ProjectiveCap(ops[0]));
    case ExprKind::kLoad: {
      std::filesystem::path p(e.path);
      if (p.is_relative() && !opts_.base_dir.empty()) p = opts_.base_dir / p;
      return read_capset(p);
    }
  }
  throw Error("unhandled expression kind");
}

PointSet eval_expr(std::string_view text, const EvalOptions& opts) {
  return Evaluator(opts).eval(text);
}

}  // namespace capset
