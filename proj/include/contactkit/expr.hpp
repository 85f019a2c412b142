#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "contactkit/series.hpp"

namespace contactkit {

// Scalar expression language over z, x1..x2k:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' nonneg-int)*
//   atom   := rational | 'z' | 'x'<digits> | 'exp' '(' expr ')'
//           | 'inv' '(' expr ')' | '(' expr ')'
// Rational literals are 'p' or 'p/q' with nonneg integer p, positive q; there
// is no general division operator. Literal nodes are never negative (the
// parser wraps leading '-' in Neg), so printing then reparsing reproduces the
// tree exactly.

struct ParseError : std::invalid_argument {
  int column;  // 1-based position in the input
  ParseError(const std::string& what, int col) : std::invalid_argument(what), column(col) {}
};

enum class ExprKind { literal, variable, add, sub, mul, neg, pow, exp_fn, inv_fn };

struct Expr {
  ExprKind kind;
  Rational literal;        // literal
  int var = -1;            // variable: 0 = z, m = x^m
  int exponent = 0;        // pow
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);

// Evaluates in 2k+1 variables at the given precision. Variable indices beyond
// 2k, inv of a series with zero constant term, and similar domain faults throw
// DomainError.
Series eval_expr(const ExprPtr& e, int k, int precision);

Series parse_series(const std::string& text, int k, int precision);

std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace contactkit
