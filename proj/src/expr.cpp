#include "contactkit/expr.hpp"

#include <cctype>
#include <vector>

namespace contactkit {

namespace {

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::plus, "+", col}); break;
      case '-': out.push_back({Tok::minus, "-", col}); break;
      case '*': out.push_back({Tok::star, "*", col}); break;
      case '^': out.push_back({Tok::caret, "^", col}); break;
      case '/': out.push_back({Tok::slash, "/", col}); break;
      case '(': out.push_back({Tok::lparen, "(", col}); break;
      case ')': out.push_back({Tok::rparen, ")", col}); break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    ++i;
  }
  out.push_back({Tok::end, "", static_cast<int>(s.size()) + 1});
  return out;
}

std::shared_ptr<Expr> make(ExprKind kind) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) throw ParseError("unexpected input after expression", peek().column);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      auto node = make(take().kind == Tok::plus ? ExprKind::add : ExprKind::sub);
      node->lhs = lhs;
      node->rhs = term();
      lhs = node;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (accept(Tok::star)) {
      auto node = make(ExprKind::mul);
      node->lhs = lhs;
      node->rhs = factor();
      lhs = node;
    }
    return lhs;
  }

  ExprPtr factor() {
    if (accept(Tok::minus)) {
      auto node = make(ExprKind::neg);
      node->lhs = factor();
      return node;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    while (accept(Tok::caret)) {
      if (peek().kind != Tok::integer)
        throw ParseError("expected a non-negative integer exponent", peek().column);
      Token t = take();
      auto node = make(ExprKind::pow);
      node->lhs = base;
      try {
        node->exponent = std::stoi(t.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", t.column);
      }
      base = node;
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        Token num = take();
        std::string den = "1";
        if (accept(Tok::slash)) {
          if (peek().kind != Tok::integer)
            throw ParseError("expected an integer denominator", peek().column);
          den = take().text;
        }
        auto node = make(ExprKind::literal);
        node->literal = rational_from_parts(num.text, den);
        return node;
      }
      case Tok::ident: {
        Token id = take();
        if (id.text == "z") {
          auto node = make(ExprKind::variable);
          node->var = 0;
          return node;
        }
        if (id.text == "exp" || id.text == "inv") {
          if (!accept(Tok::lparen))
            throw ParseError("expected '(' after " + id.text, peek().column);
          auto node = make(id.text == "exp" ? ExprKind::exp_fn : ExprKind::inv_fn);
          node->lhs = expr();
          if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().column);
          return node;
        }
        if (id.text[0] == 'x' && id.text.size() > 1) {
          int m = 0;
          for (std::size_t i = 1; i < id.text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(id.text[i])))
              throw ParseError("unknown identifier '" + id.text + "'", id.column);
            m = m * 10 + (id.text[i] - '0');
            if (m > 1000000) throw ParseError("variable index out of range", id.column);
          }
          if (m < 1) throw ParseError("variable indices start at x1", id.column);
          auto node = make(ExprKind::variable);
          node->var = m;
          return node;
        }
        throw ParseError("unknown identifier '" + id.text + "'", id.column);
      }
      case Tok::lparen: {
        take();
        ExprPtr inner = expr();
        if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().column);
        return inner;
      }
      default:
        throw ParseError("expected a value", t.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Series ipow(const Series& base, int e) {
  Series result = Series::constant(base.k(), base.precision(), 1);
  Series sq = base;
  int n = e;
  while (n > 0) {
    if (n & 1) result = result * sq;
    n >>= 1;
    if (n > 0) {
      if (sq.is_zero()) return Series(base.k(), base.precision());  // remaining bits all zero out
      sq = sq * sq;
    }
  }
  return result;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(lex(text)).parse(); }

Series eval_expr(const ExprPtr& e, int k, int precision) {
  if (!e) throw DomainError("empty expression");
  switch (e->kind) {
    case ExprKind::literal:
      return Series::constant(k, precision, e->literal);
    case ExprKind::variable:
      if (e->var > 2 * k)
        throw DomainError("variable x" + std::to_string(e->var) + " outside 2k+1 coordinates");
      return Series::variable(k, precision, e->var);
    case ExprKind::add:
      return eval_expr(e->lhs, k, precision) + eval_expr(e->rhs, k, precision);
    case ExprKind::sub:
      return eval_expr(e->lhs, k, precision) - eval_expr(e->rhs, k, precision);
    case ExprKind::mul:
      return eval_expr(e->lhs, k, precision) * eval_expr(e->rhs, k, precision);
    case ExprKind::neg:
      return -eval_expr(e->lhs, k, precision);
    case ExprKind::pow:
      return ipow(eval_expr(e->lhs, k, precision), e->exponent);
    case ExprKind::exp_fn:
      return exp(eval_expr(e->lhs, k, precision));
    case ExprKind::inv_fn:
      return inverse(eval_expr(e->lhs, k, precision));
  }
  throw DomainError("corrupt expression node");
}

Series parse_series(const std::string& text, int k, int precision) {
  return eval_expr(parse_expr(text), k, precision);
}

namespace {

// add/sub = 1, mul = 2, unary minus = 3, pow = 4, atoms = 5.
int prec_of(const Expr& e) {
  switch (e.kind) {
    case ExprKind::add:
    case ExprKind::sub: return 1;
    case ExprKind::mul: return 2;
    case ExprKind::neg: return 3;
    case ExprKind::pow: return 4;
    default: return 5;
  }
}

void print_into(const Expr& e, int context, std::string& out) {
  int p = prec_of(e);
  bool parens = p < context;
  if (parens) out += "(";
  switch (e.kind) {
    case ExprKind::literal:
      out += to_string(e.literal);
      break;
    case ExprKind::variable:
      out += e.var == 0 ? "z" : "x" + std::to_string(e.var);
      break;
    case ExprKind::add:
      print_into(*e.lhs, 1, out);
      out += " + ";
      print_into(*e.rhs, 2, out);
      break;
    case ExprKind::sub:
      print_into(*e.lhs, 1, out);
      out += " - ";
      print_into(*e.rhs, 2, out);
      break;
    case ExprKind::mul:
      print_into(*e.lhs, 2, out);
      out += "*";
      print_into(*e.rhs, 3, out);
      break;
    case ExprKind::neg:
      out += "-";
      print_into(*e.lhs, 3, out);
      break;
    case ExprKind::pow:
      print_into(*e.lhs, 5, out);
      out += "^" + std::to_string(e.exponent);
      break;
    case ExprKind::exp_fn:
      out += "exp(";
      print_into(*e.lhs, 1, out);
      out += ")";
      break;
    case ExprKind::inv_fn:
      out += "inv(";
      print_into(*e.lhs, 1, out);
      out += ")";
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  if (!e) throw DomainError("empty expression");
  std::string out;
  print_into(*e, 1, out);
  return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::literal: return a->literal == b->literal;
    case ExprKind::variable: return a->var == b->var;
    case ExprKind::pow: return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    case ExprKind::neg:
    case ExprKind::exp_fn:
    case ExprKind::inv_fn: return expr_equal(a->lhs, b->lhs);
    default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

}  // namespace contactkit
