// Copyright 2026 The HahnForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hahnforge/spec_dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hahnforge {

namespace {

constexpr std::size_t kMaxDepth = 200;
constexpr std::uint64_t kMaxGrid = 1'000'000;

std::string kind_label(Diagnostic::Kind k) {
  switch (k) {
    case Diagnostic::Kind::kSyntax:
      return "syntax error";
    case Diagnostic::Kind::kUndeclaredName:
      return "undeclared name";
    case Diagnostic::Kind::kNonPL:
      return "non-PL construct";
    case Diagnostic::Kind::kDuplicateName:
      return "duplicate name";
    case Diagnostic::Kind::kDivisionByZero:
      return "division by zero";
    case Diagnostic::Kind::kBadDirective:
      return "bad directive";
  }
  return "error";
}

std::string render(const Diagnostic& d) {
  std::string out = "line " + std::to_string(d.line) + ", column " + std::to_string(d.column) + ": " +
                    kind_label(d.kind) + ": " + d.message;
  if (!d.expected.empty()) out += " (expected " + d.expected + ")";
  return out;
}

// Lexer ----------------------------------------------------------------------

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kLParen, kRParen, kComma, kEquals, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kNewline:
      return "end of line";
    case Tok::kEnd:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

[[noreturn]] void fail(Diagnostic::Kind kind, std::size_t line, std::size_t column, std::string message,
                       std::string expected = {}) {
  throw SpecError(Diagnostic{kind, line, column, std::move(message), std::move(expected)});
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      out.push_back({Tok::kNewline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    const std::size_t start_col = col;
    if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) ++i;
      // a/b with no spaces is a single rational literal
      if (i + 1 < src.size() && src[i] == '/' && is_digit(src[i + 1])) {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      out.push_back({Tok::kNumber, std::string(src.substr(start, i - start)), line, start_col});
      col += i - start;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(src.substr(start, i - start)), line, start_col});
      col += i - start;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '=': kind = Tok::kEquals; break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
        fail(Diagnostic::Kind::kSyntax, line, col, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({kind, std::string(1, c), line, col});
    ++i;
    ++col;
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

// Constant folding -------------------------------------------------------------

bool is_constant(const Expr& e) {
  if (e.kind == Expr::Kind::kVar || e.kind == Expr::Kind::kRef) return false;
  for (const auto& a : e.args) {
    if (!is_constant(a)) return false;
  }
  return true;
}

Rat fold(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kConst:
      return e.value;
    case Expr::Kind::kAdd:
      return Rat(fold(e.args[0]) + fold(e.args[1]));
    case Expr::Kind::kSub:
      return Rat(fold(e.args[0]) - fold(e.args[1]));
    case Expr::Kind::kNeg:
      return Rat(-fold(e.args[0]));
    case Expr::Kind::kScale:
      return Rat(e.value * fold(e.args[0]));
    case Expr::Kind::kAbs:
      return rat_abs(fold(e.args[0]));
    case Expr::Kind::kMin:
    case Expr::Kind::kMax: {
      Rat best = fold(e.args[0]);
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        Rat v = fold(e.args[i]);
        if (e.kind == Expr::Kind::kMin ? v < best : v > best) best = v;
      }
      return best;
    }
    default:
      throw std::logic_error("fold of a non-constant expression");
  }
}

// Parser -----------------------------------------------------------------------

const std::set<std::string, std::less<>> kReserved = {"x",    "min",  "max",      "abs",      "grid",
                                                      "limit", "tail", "harmonic", "geometric", "zero"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SpecAST run() {
    SpecAST spec;
    std::optional<std::size_t> tail_line;
    for (;;) {
      while (peek().kind == Tok::kNewline) ++pos_;
      if (peek().kind == Tok::kEnd) break;
      const Token head = peek();
      if (head.kind != Tok::kIdent) {
        fail(Diagnostic::Kind::kSyntax, head.line, head.column, "unexpected " + describe(head),
             "a declaration or directive");
      }
      if (head.text == "grid") {
        ++pos_;
        directive_once(spec.grid.has_value(), head);
        spec.grid = grid_size();
      } else if (head.text == "limit") {
        ++pos_;
        directive_once(spec.limit.has_value(), head);
        spec.limit = expr(0);
      } else if (head.text == "tail") {
        ++pos_;
        directive_once(spec.tail.has_value(), head);
        spec.tail = tail_rule();
        tail_line = head.line;
      } else {
        spec.family.push_back(declaration());
      }
      const Token& end = peek();
      if (end.kind != Tok::kNewline && end.kind != Tok::kEnd) {
        fail(Diagnostic::Kind::kSyntax, end.line, end.column, "unexpected " + describe(end), "end of line");
      }
    }
    if (spec.tail && !spec.limit) {
      fail(Diagnostic::Kind::kBadDirective, *tail_line, 1, "a tail rule needs a limit line");
    }
    return spec;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) fail(Diagnostic::Kind::kSyntax, t.line, t.column, "unexpected " + describe(t), what);
    return take();
  }

  void directive_once(bool seen, const Token& head) {
    if (seen) fail(Diagnostic::Kind::kBadDirective, head.line, head.column, "repeated '" + head.text + "' line");
  }

  Rat number(const Token& t) {
    try {
      return parse_rat(t.text);
    } catch (const std::invalid_argument&) {
      fail(Diagnostic::Kind::kDivisionByZero, t.line, t.column, "zero denominator in '" + t.text + "'");
    }
  }

  Rat signed_number() {
    bool negative = false;
    if (peek().kind == Tok::kMinus) {
      ++pos_;
      negative = true;
    }
    Rat r = number(expect(Tok::kNumber, "a rational number"));
    return negative ? Rat(-r) : r;
  }

  std::uint64_t grid_size() {
    const Token& t = expect(Tok::kNumber, "a point count");
    if (t.text.find('/') != std::string::npos) {
      fail(Diagnostic::Kind::kBadDirective, t.line, t.column, "grid size must be an integer");
    }
    mpz_class n(t.text, 10);
    if (n < 2 || n > kMaxGrid) {
      fail(Diagnostic::Kind::kBadDirective, t.line, t.column,
           "grid size must be between 2 and " + std::to_string(kMaxGrid));
    }
    return n.get_ui();
  }

  TailRule tail_rule() {
    const Token& kind = expect(Tok::kIdent, "zero, harmonic or geometric");
    if (kind.text == "zero") return {NullSequence::zero(), Expr::constant(Rat(0))};
    NullSequence coeff;
    if (kind.text == "harmonic") {
      expect(Tok::kLParen, "'('");
      coeff = NullSequence::harmonic(signed_number());
      expect(Tok::kRParen, "')'");
    } else if (kind.text == "geometric") {
      expect(Tok::kLParen, "'('");
      Rat c = signed_number();
      expect(Tok::kComma, "','");
      const Token& qtok = peek();
      Rat q = signed_number();
      if (q <= 0 || q >= 1) {
        fail(Diagnostic::Kind::kBadDirective, qtok.line, qtok.column, "geometric ratio must lie in (0,1)");
      }
      coeff = NullSequence::geometric(c, q);
      expect(Tok::kRParen, "')'");
    } else {
      fail(Diagnostic::Kind::kBadDirective, kind.line, kind.column, "unknown tail rule '" + kind.text + "'",
           "zero, harmonic or geometric");
    }
    expect(Tok::kStar, "'*'");
    return {coeff, expr(0)};
  }

  Declaration declaration() {
    const Token name = take();
    if (kReserved.count(name.text)) {
      fail(Diagnostic::Kind::kSyntax, name.line, name.column, "'" + name.text + "' is reserved",
           "a member name");
    }
    expect(Tok::kEquals, "'='");
    if (declared_.count(name.text)) {
      fail(Diagnostic::Kind::kDuplicateName, name.line, name.column, "'" + name.text + "' is already declared");
    }
    Expr e = expr(0);
    declared_.insert(name.text);
    return {name.text, std::move(e), name.line};
  }

  void guard(std::size_t depth) const {
    if (depth > kMaxDepth) {
      fail(Diagnostic::Kind::kSyntax, peek().line, peek().column, "expression nested too deeply");
    }
  }

  Expr expr(std::size_t depth) {
    guard(depth);
    Expr left = term(depth);
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Expr::Kind k = take().kind == Tok::kPlus ? Expr::Kind::kAdd : Expr::Kind::kSub;
      Expr right = term(depth);
      left = Expr::node(k, {std::move(left), std::move(right)});
    }
    return left;
  }

  Expr term(std::size_t depth) {
    Expr left = unary(depth + 1);
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token op = take();
      Expr right = unary(depth + 1);
      if (op.kind == Tok::kStar) {
        left = product(std::move(left), std::move(right), op);
      } else {
        if (!is_constant(right)) {
          fail(Diagnostic::Kind::kNonPL, op.line, op.column, "division by a non-constant expression");
        }
        const Rat d = fold(right);
        if (d == 0) fail(Diagnostic::Kind::kDivisionByZero, op.line, op.column, "divisor evaluates to 0");
        left = Expr::node(Expr::Kind::kScale, {std::move(left)}, Rat(1 / d));
      }
    }
    return left;
  }

  static Expr product(Expr a, Expr b, const Token& op) {
    if (a.kind == Expr::Kind::kConst) return Expr::node(Expr::Kind::kScale, {std::move(b)}, a.value);
    if (b.kind == Expr::Kind::kConst) return Expr::node(Expr::Kind::kScale, {std::move(a)}, b.value);
    if (is_constant(a)) return Expr::node(Expr::Kind::kScale, {std::move(b)}, fold(a));
    if (is_constant(b)) return Expr::node(Expr::Kind::kScale, {std::move(a)}, fold(b));
    fail(Diagnostic::Kind::kNonPL, op.line, op.column, "product of two non-constant expressions");
  }

  Expr unary(std::size_t depth) {
    guard(depth);
    if (peek().kind == Tok::kMinus) {
      ++pos_;
      if (peek().kind == Tok::kNumber) return Expr::constant(Rat(-number(take())));
      return Expr::node(Expr::Kind::kNeg, {unary(depth + 1)});
    }
    return primary(depth);
  }

  Expr primary(std::size_t depth) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::kNumber:
        ++pos_;
        return Expr::constant(number(t));
      case Tok::kLParen: {
        ++pos_;
        Expr inner = expr(depth + 1);
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        ++pos_;
        if (t.text == "x") return Expr::var();
        if (t.text == "min" || t.text == "max") {
          expect(Tok::kLParen, "'('");
          std::vector<Expr> args;
          args.push_back(expr(depth + 1));
          while (peek().kind == Tok::kComma) {
            ++pos_;
            args.push_back(expr(depth + 1));
          }
          expect(Tok::kRParen, "')' or ','");
          return Expr::node(t.text == "min" ? Expr::Kind::kMin : Expr::Kind::kMax, std::move(args));
        }
        if (t.text == "abs") {
          expect(Tok::kLParen, "'('");
          Expr inner = expr(depth + 1);
          expect(Tok::kRParen, "')'");
          return Expr::node(Expr::Kind::kAbs, {std::move(inner)});
        }
        if (kReserved.count(t.text)) {
          fail(Diagnostic::Kind::kSyntax, t.line, t.column, "'" + t.text + "' cannot appear in an expression",
               "an expression");
        }
        if (!declared_.count(t.text)) {
          fail(Diagnostic::Kind::kUndeclaredName, t.line, t.column, "'" + t.text + "' is not declared");
        }
        return Expr::ref(t.text);
      default:
        fail(Diagnostic::Kind::kSyntax, t.line, t.column, "unexpected " + describe(t), "an expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string, std::less<>> declared_;
};

// Printer ----------------------------------------------------------------------

bool is_sum(const Expr& e) { return e.kind == Expr::Kind::kAdd || e.kind == Expr::Kind::kSub; }

void print(std::ostream& out, const Expr& e);

// Operand of unary minus or of a scaling.
void print_operand(std::ostream& out, const Expr& e, bool wrap_const) {
  const bool wrap = is_sum(e) || e.kind == Expr::Kind::kScale || (wrap_const && e.kind == Expr::Kind::kConst);
  if (wrap) out << '(';
  print(out, e);
  if (wrap) out << ')';
}

void print_call(std::ostream& out, const char* fn, const std::vector<Expr>& args) {
  out << fn << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out << ", ";
    print(out, args[i]);
  }
  out << ')';
}

void print(std::ostream& out, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kConst:
      out << to_display(e.value);
      break;
    case Expr::Kind::kVar:
      out << 'x';
      break;
    case Expr::Kind::kRef:
      out << e.name;
      break;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      print(out, e.args[0]);
      out << (e.kind == Expr::Kind::kAdd ? " + " : " - ");
      if (is_sum(e.args[1])) out << '(';
      print(out, e.args[1]);
      if (is_sum(e.args[1])) out << ')';
      break;
    case Expr::Kind::kNeg:
      out << '-';
      // "-3" would read back as a literal, and "--3" likewise
      print_operand(out, e.args[0], true);
      break;
    case Expr::Kind::kScale:
      out << to_display(e.value) << " * ";
      print_operand(out, e.args[0], false);
      break;
    case Expr::Kind::kMin:
      print_call(out, "min", e.args);
      break;
    case Expr::Kind::kMax:
      print_call(out, "max", e.args);
      break;
    case Expr::Kind::kAbs:
      print_call(out, "abs", e.args);
      break;
  }
}

// Elaboration ------------------------------------------------------------------

PLFunc to_pl(const Expr& e, const std::unordered_map<std::string, PLFunc>& env) {
  switch (e.kind) {
    case Expr::Kind::kConst:
      return PLFunc::constant(e.value);
    case Expr::Kind::kVar:
      return PLFunc::identity();
    case Expr::Kind::kRef:
      return env.at(e.name);
    case Expr::Kind::kAdd:
      return to_pl(e.args[0], env) + to_pl(e.args[1], env);
    case Expr::Kind::kSub:
      return to_pl(e.args[0], env) - to_pl(e.args[1], env);
    case Expr::Kind::kNeg:
      return -to_pl(e.args[0], env);
    case Expr::Kind::kScale:
      return e.value * to_pl(e.args[0], env);
    case Expr::Kind::kAbs:
      return pl_abs(to_pl(e.args[0], env));
    case Expr::Kind::kMin:
    case Expr::Kind::kMax: {
      std::vector<PLFunc> args;
      for (const auto& a : e.args) args.push_back(to_pl(a, env));
      return e.kind == Expr::Kind::kMin ? pl_min(args) : pl_max(args);
    }
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace

SpecError::SpecError(Diagnostic d) : std::runtime_error(render(d)), diag_(std::move(d)) {}

SpecAST parse_spec(std::string_view text) { return Parser(lex(text)).run(); }

std::string pretty_print(const Expr& e) {
  std::ostringstream out;
  print(out, e);
  return out.str();
}

std::string pretty_print(const SpecAST& spec) {
  std::ostringstream out;
  for (const auto& d : spec.family) out << d.name << " = " << pretty_print(d.expr) << '\n';
  if (spec.limit) out << "limit " << pretty_print(*spec.limit) << '\n';
  if (spec.tail) {
    const NullSequence& c = spec.tail->coeff;
    switch (c.kind) {
      case NullSequence::Kind::kZero:
        out << "tail zero\n";
        break;
      case NullSequence::Kind::kHarmonic:
        out << "tail harmonic(" << to_display(c.coefficient) << ") * " << pretty_print(spec.tail->shape) << '\n';
        break;
      case NullSequence::Kind::kGeometric:
        out << "tail geometric(" << to_display(c.coefficient) << ", " << to_display(c.ratio) << ") * "
            << pretty_print(spec.tail->shape) << '\n';
        break;
    }
  }
  if (spec.grid) out << "grid " << *spec.grid << '\n';
  return out.str();
}

StableFamily ElaboratedSpec::family() const {
  if (members.empty()) fail(Diagnostic::Kind::kBadDirective, 1, 1, "the spec declares no family members");
  return StableFamily(members);
}

ElaboratedSpec elaborate(const SpecAST& spec) {
  ElaboratedSpec out;
  std::unordered_map<std::string, PLFunc> env;
  for (const auto& d : spec.family) {
    PLFunc f = to_pl(d.expr, env);
    env.emplace(d.name, f);
    out.names.push_back(d.name);
    out.members.push_back(std::move(f));
  }
  out.grid = spec.grid;
  if (spec.limit) {
    TailFamily tf{out.members, to_pl(*spec.limit, env), NullSequence::zero(), PLFunc::constant(Rat(0))};
    if (spec.tail) {
      tf.coeff = spec.tail->coeff;
      tf.shape = to_pl(spec.tail->shape, env);
    }
    out.tail_family = std::move(tf);
  }
  return out;
}

ElaboratedSpec load_spec(std::string_view text) { return elaborate(parse_spec(text)); }

}  // namespace hahnforge
