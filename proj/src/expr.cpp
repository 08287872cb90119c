#include "exactrn/expr.hpp"

#include <cctype>
#include <utility>

#include "exactrn/errors.hpp"

namespace exactrn {

Expr::Expr(Kind kind, std::size_t index, Rat value, ExprPtr lhs, ExprPtr rhs)
    : kind_(kind),
      index_(index),
      value_(std::move(value)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {
  contains_sgn_ = kind_ == Kind::Sgn;
  if (lhs_) {
    contains_sgn_ = contains_sgn_ || lhs_->contains_sgn_;
    min_arity_ = lhs_->min_arity_;
  }
  if (rhs_) {
    contains_sgn_ = contains_sgn_ || rhs_->contains_sgn_;
    if (rhs_->min_arity_ > min_arity_) min_arity_ = rhs_->min_arity_;
  }
  if (kind_ == Kind::Var) min_arity_ = index_ + 1;
}

ExprPtr Expr::var(std::size_t index) {
  return ExprPtr(new Expr(Kind::Var, index, Rat(0), nullptr, nullptr));
}

ExprPtr Expr::constant(Rat value) {
  return ExprPtr(new Expr(Kind::Const, 0, std::move(value), nullptr, nullptr));
}

ExprPtr Expr::add(ExprPtr lhs, ExprPtr rhs) {
  return ExprPtr(
      new Expr(Kind::Add, 0, Rat(0), std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::sub(ExprPtr lhs, ExprPtr rhs) {
  return ExprPtr(
      new Expr(Kind::Sub, 0, Rat(0), std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::mul(ExprPtr lhs, ExprPtr rhs) {
  return ExprPtr(
      new Expr(Kind::Mul, 0, Rat(0), std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::neg(ExprPtr operand) {
  return ExprPtr(new Expr(Kind::Neg, 0, Rat(0), std::move(operand), nullptr));
}

ExprPtr Expr::sgn(ExprPtr operand) {
  return ExprPtr(new Expr(Kind::Sgn, 0, Rat(0), std::move(operand), nullptr));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity)
      : text_(text), arity_(arity) {}

  Expression parse() {
    ExprPtr root = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after expression");
    return Expression{std::move(root), arity_};
  }

 private:
  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_sum() {
    ExprPtr node = parse_product();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        node = Expr::add(std::move(node), parse_product());
      } else if (consume('-')) {
        node = Expr::sub(std::move(node), parse_product());
      } else {
        return node;
      }
    }
  }

  ExprPtr parse_product() {
    ExprPtr node = parse_factor();
    for (;;) {
      skip_ws();
      if (consume('*')) {
        node = Expr::mul(std::move(node), parse_factor());
      } else {
        return node;
      }
    }
  }

  // Unary minus binds tighter than '*': "-x1*x2" is (-x1)*x2.
  ExprPtr parse_factor() {
    skip_ws();
    if (consume('-')) return Expr::neg(parse_factor());
    return parse_primary();
  }

  ExprPtr parse_primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_sum();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (c == 'x') return parse_var();
    if (text_.compare(pos_, 3, "sgn") == 0) {
      pos_ += 3;
      skip_ws();
      if (!consume('(')) fail("expected '(' after sgn");
      ExprPtr inner = parse_sum();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return Expr::sgn(std::move(inner));
    }
    if (pos_ == text_.size()) fail("unexpected end of input");
    fail("unexpected character");
  }

  std::size_t scan_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return start;
  }

  // Unsigned literal: digits, optionally "/digits" or ".digits", with no
  // interior whitespace. Signs come from the grammar, not the token.
  ExprPtr parse_number() {
    std::size_t start = pos_;
    scan_digits();
    if (peek() == '/') {
      ++pos_;
      scan_digits();
    } else if (peek() == '.') {
      ++pos_;
      scan_digits();
    }
    std::string_view token = text_.substr(start, pos_ - start);
    try {
      return Expr::constant(Rat::parse(token));
    } catch (const DomainError&) {
      pos_ = start;
      fail("literal with zero denominator");
    }
  }

  ExprPtr parse_var() {
    std::size_t start = pos_;
    ++pos_;  // 'x'
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected variable index after 'x'");
    }
    std::size_t digits = scan_digits();
    unsigned long long index = 0;
    for (std::size_t i = digits; i < pos_; ++i) {
      index = index * 10 + static_cast<unsigned long long>(text_[i] - '0');
      if (index > 1'000'000) break;
    }
    if (index == 0) {
      pos_ = start;
      fail("variable indices start at x1");
    }
    if (index > arity_) {
      pos_ = start;
      fail("variable index exceeds arity");
    }
    return Expr::var(static_cast<std::size_t>(index - 1));
  }
};

Hyper eval_node(const Expr& node, const HyperVec& point) {
  switch (node.kind()) {
    case Expr::Kind::Var:
      return point[node.var_index()];
    case Expr::Kind::Const:
      return Hyper(node.value());
    case Expr::Kind::Add:
      return eval_node(*node.lhs(), point) + eval_node(*node.rhs(), point);
    case Expr::Kind::Sub:
      return eval_node(*node.lhs(), point) - eval_node(*node.rhs(), point);
    case Expr::Kind::Mul:
      return eval_node(*node.lhs(), point) * eval_node(*node.rhs(), point);
    case Expr::Kind::Neg:
      return -eval_node(*node.lhs(), point);
    case Expr::Kind::Sgn:
      return Hyper(Rat(eval_node(*node.lhs(), point).sign()));
  }
  throw LogicFault("unreachable expression kind");
}

// Printing precedence: sum 1, product 2, prefix minus 3, atoms 4. A child is
// parenthesized when its level is too low for the slot, so the output
// re-parses to the same tree.
int print_level(const Expr& node) {
  switch (node.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Const:
      return node.value().sign() < 0 ? 3 : 4;
    default:
      return 4;
  }
}

void print_node(const Expr& node, int min_level, std::string& out) {
  bool parens = print_level(node) < min_level;
  if (parens) out += '(';
  switch (node.kind()) {
    case Expr::Kind::Var:
      out += 'x';
      out += std::to_string(node.var_index() + 1);
      break;
    case Expr::Kind::Const:
      out += node.value().str();
      break;
    case Expr::Kind::Add:
      print_node(*node.lhs(), 1, out);
      out += " + ";
      print_node(*node.rhs(), 2, out);
      break;
    case Expr::Kind::Sub:
      print_node(*node.lhs(), 1, out);
      out += " - ";
      print_node(*node.rhs(), 2, out);
      break;
    case Expr::Kind::Mul:
      print_node(*node.lhs(), 2, out);
      out += '*';
      print_node(*node.rhs(), 3, out);
      break;
    case Expr::Kind::Neg:
      out += '-';
      print_node(*node.lhs(), 3, out);
      break;
    case Expr::Kind::Sgn:
      out += "sgn(";
      print_node(*node.lhs(), 1, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Expression parse_expr(std::string_view text, std::size_t arity) {
  return Parser(text, arity).parse();
}

Hyper eval_expr(const Expression& e, const HyperVec& point) {
  if (!e.root) throw LogicFault("evaluating empty expression");
  if (point.dim() != e.arity) {
    throw DimensionError("eval_expr: point dimension " +
                         std::to_string(point.dim()) +
                         " does not match arity " + std::to_string(e.arity));
  }
  return eval_node(*e.root, point);
}

std::string to_string(const Expression& e) {
  if (!e.root) return "";
  std::string out;
  print_node(*e.root, 0, out);
  return out;
}

Expression sum_expr(std::size_t n) {
  if (n == 0) return Expression{Expr::constant(Rat(0)), 0};
  ExprPtr node = Expr::var(0);
  for (std::size_t i = 1; i < n; ++i) {
    node = Expr::add(std::move(node), Expr::var(i));
  }
  return Expression{std::move(node), n};
}

Expression prod2_expr() {
  return Expression{Expr::mul(Expr::var(0), Expr::var(1)), 2};
}

Expression dot_fixed_expr(const Vec<Rat>& coeffs) {
  if (coeffs.dim() == 0) return Expression{Expr::constant(Rat(0)), 0};
  ExprPtr node = Expr::mul(Expr::constant(coeffs[0]), Expr::var(0));
  for (std::size_t i = 1; i < coeffs.dim(); ++i) {
    node = Expr::add(std::move(node),
                     Expr::mul(Expr::constant(coeffs[i]), Expr::var(i)));
  }
  return Expression{std::move(node), coeffs.dim()};
}

}  // namespace exactrn
