#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "exactrn/hyper.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/vec.hpp"

namespace exactrn {

using HyperVec = Vec<Hyper>;

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node for expressions R^n -> R. The language is +, -, *,
/// unary minus, rational constants, variables, and sgn; division is
/// deliberately absent so evaluation stays total and exact over hyperreal
/// points. Sgn (-1/0/+1) is the one discontinuous node.
class Expr {
 public:
  enum class Kind { Var, Const, Add, Sub, Mul, Neg, Sgn };

  static ExprPtr var(std::size_t index);
  static ExprPtr constant(Rat value);
  static ExprPtr add(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr sub(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr neg(ExprPtr operand);
  static ExprPtr sgn(ExprPtr operand);

  Kind kind() const { return kind_; }
  std::size_t var_index() const { return index_; }
  const Rat& value() const { return value_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }
  /// True when any descendant is a Sgn node.
  bool contains_sgn() const { return contains_sgn_; }
  /// One past the largest variable index used; 0 for variable-free trees.
  std::size_t min_arity() const { return min_arity_; }

 private:
  Expr(Kind kind, std::size_t index, Rat value, ExprPtr lhs, ExprPtr rhs);

  Kind kind_;
  std::size_t index_{};
  Rat value_;
  ExprPtr lhs_;
  ExprPtr rhs_;
  bool contains_sgn_{};
  std::size_t min_arity_{};
};

/// An expression together with its declared arity; every variable index in
/// the tree is < arity.
struct Expression {
  ExprPtr root;
  std::size_t arity{};

  bool contains_sgn() const { return root && root->contains_sgn(); }
};

/// Parses the conventional infix grammar: variables x1..xn (1-based in the
/// text, 0-based in the tree), nonnegative literals "p/q" / "p" / "a.b",
/// binary + - *, unary -, sgn(...), parentheses. * binds tighter than + and
/// -; binary operators associate left. Throws ParseError with a byte
/// position for syntax errors and for variables at or beyond the arity.
Expression parse_expr(std::string_view text, std::size_t arity);

/// Exact bottom-up evaluation at a hyperreal point. Sgn evaluates its
/// operand and takes the leading-term sign. Point dimension must equal the
/// arity.
Hyper eval_expr(const Expression& e, const HyperVec& point);

/// Round-trippable infix rendering (fully parenthesized where needed).
std::string to_string(const Expression& e);

// Stock expressions for the probe batteries.
Expression sum_expr(std::size_t n);
Expression prod2_expr();
Expression dot_fixed_expr(const Vec<Rat>& coeffs);

}  // namespace exactrn
