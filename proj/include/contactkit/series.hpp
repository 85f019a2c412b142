#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "contactkit/errors.hpp"
#include "contactkit/rational.hpp"

namespace contactkit {

// Exponent vector over the coordinates (z, x1, ..., x2k); entry 0 is the
// z-exponent. Length is always 2k+1.
using Exponent = std::vector<std::uint32_t>;

int total_degree(const Exponent& e);

// Graded lexicographic order: compare total degree first, ties broken by
// comparing the exponent vectors (e_z, e_1, ..., e_2k) lexicographically.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Raised by div_z when some certified monomial is not divisible by z.
struct DivisibilityError : std::runtime_error {
  Exponent witness;
  DivisibilityError(const std::string& what, Exponent w)
      : std::runtime_error(what), witness(std::move(w)) {}
};

// Truncated multivariate formal power series over Q in (z, x1, ..., x2k).
//
// Invariants: every stored term has total degree < precision and a nonzero
// coefficient; precision >= 1. A Series certifies exactly the coefficients of
// total degree < precision. Instances are immutable once built; all operations
// return new values.
class Series {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  Series(int k, int precision);  // zero series

  static Series constant(int k, int precision, const Rational& c);
  static Series variable(int k, int precision, int var);  // var 0 = z
  static Series monomial(int k, int precision, const Exponent& e, const Rational& c);

  int k() const { return k_; }
  int precision() const { return precision_; }
  int num_vars() const { return 2 * k_ + 1; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;

  // Lower the certified precision (and drop now-uncertified terms).
  Series truncated(int precision) const;

  void add_term(const Exponent& e, const Rational& c);  // build helper

 private:
  int k_;
  int precision_;
  TermMap terms_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

// d/dx_var (var 0 = z). Result precision drops by one.
Series partial(const Series& a, int var);

// exp(a) = sum a^n / n!; requires a(0) = 0.
Series exp(const Series& a);

// b with a*b = 1 at the precision of a; requires a(0) != 0.
Series inverse(const Series& a);

// a/z; every certified monomial must carry a positive z-exponent, otherwise
// DivisibilityError with the graded-lex-least offending monomial as witness.
Series div_z(const Series& a);

// Least z-exponent among certified monomials; nullopt means +infinity (a = 0).
std::optional<int> z_order(const Series& a);

Series restrict_z0(const Series& a);
Rational eval_origin(const Series& a);

bool is_z_free(const Series& a);

// Equality of all coefficients below the smaller of the two precisions.
bool agree(const Series& a, const Series& b);

// Strict identity: same k, same precision, same term map.
bool identical(const Series& a, const Series& b);

}  // namespace contactkit
