#include <random>

#include "contactkit/series.hpp"
#include "doctest.h"

using namespace contactkit;

namespace {

Series random_series(std::mt19937_64& rng, int k, int precision, int maxdeg) {
  Series s(k, precision);
  int nv = 2 * k + 1;
  for (int t = 0; t < 12; ++t) {
    Exponent e(nv, 0);
    int budget = static_cast<int>(rng() % (maxdeg + 1));
    for (int v = 0; v < nv && budget > 0; ++v) {
      int d = static_cast<int>(rng() % (budget + 1));
      e[v] = d;
      budget -= d;
    }
    int num = static_cast<int>(rng() % 11) - 5;
    int den = 1 + static_cast<int>(rng() % 5);
    if (num != 0) s.add_term(e, Rational(num, den));
  }
  return s;
}

}  // namespace

TEST_CASE("graded lex order and term storage") {
  GradedLexLess less;
  CHECK(less({0, 1, 0}, {0, 0, 2}));   // degree first
  CHECK(less({0, 1, 0}, {1, 0, 0}));   // ties lexicographically on (e_z, e_1, ...)
  CHECK(less({0, 0, 1}, {0, 1, 0}));
  CHECK_FALSE(less({0, 1, 0}, {0, 1, 0}));

  Series s(1, 4);
  s.add_term({0, 1, 1}, Rational(2));
  s.add_term({0, 1, 1}, Rational(-2));  // cancels, term pruned
  CHECK(s.is_zero());

  s.add_term({0, 3, 3}, Rational(1));  // degree 6 >= precision 4, dropped
  CHECK(s.is_zero());
}

TEST_CASE("coefficient certification") {
  Series s = Series::variable(1, 3, 1);
  CHECK(s.coefficient({0, 1, 0}) == 1);
  CHECK(s.coefficient({0, 2, 0}) == 0);            // certified zero
  CHECK_THROWS_AS(s.coefficient({0, 3, 0}), DomainError);  // uncertified
  CHECK_THROWS_AS(s.coefficient({0, 1}), MismatchError);   // wrong length
}

TEST_CASE("arithmetic and precision propagation") {
  Series a = Series::variable(1, 5, 1);
  Series b = Series::variable(1, 3, 2);
  CHECK((a + b).precision() == 3);
  CHECK((a * b).precision() == 3);
  CHECK((a * b).coefficient({0, 1, 1}) == 1);

  Series z = Series::variable(1, 4, 0);
  Series p = Series::constant(1, 4, 2) + z;  // 2 + z
  Series q = p * p;                          // 4 + 4z + z^2
  CHECK(q.coefficient({0, 0, 0}) == 4);
  CHECK(q.coefficient({1, 0, 0}) == 4);
  CHECK(q.coefficient({2, 0, 0}) == 1);

  CHECK_THROWS_AS(Series(0, 4), DomainError);
  CHECK_THROWS_AS(Series(1, 0), PrecisionError);
}

TEST_CASE("ring identities on random series") {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 20; ++t) {
    Series a = random_series(rng, 2, 5, 3);
    Series b = random_series(rng, 2, 5, 3);
    Series c = random_series(rng, 2, 5, 3);
    CHECK(identical(a + b, b + a));
    CHECK(identical(a * b, b * a));
    CHECK(identical((a + b) * c, a * c + b * c));
    CHECK(identical((a * b) * c, a * (b * c)));
    CHECK(identical(a - a, Series(2, 5)));
  }
}

TEST_CASE("truncation is a ring homomorphism") {
  std::mt19937_64 rng(515151);
  for (int t = 0; t < 10; ++t) {
    Series a = random_series(rng, 1, 6, 4);
    Series b = random_series(rng, 1, 6, 4);
    CHECK(identical((a * b).truncated(3), a.truncated(3) * b.truncated(3)));
    CHECK(identical((a + b).truncated(3), a.truncated(3) + b.truncated(3)));
  }
  Series a = random_series(rng, 1, 6, 4);
  CHECK_THROWS_AS(a.truncated(7), DomainError);     // cannot raise precision
  CHECK_THROWS_AS(a.truncated(0), PrecisionError);
}

TEST_CASE("partial derivatives") {
  // d/dx1 exp(x1 x2) = x2 exp(x1 x2) = x2 + x1 x2^2 + ... (precision drops)
  Series x1 = Series::variable(1, 5, 1);
  Series x2 = Series::variable(1, 5, 2);
  Series e = exp(x1 * x2);
  Series d1 = partial(e, 1);
  CHECK(d1.precision() == 4);
  CHECK(d1.coefficient({0, 0, 1}) == 1);
  CHECK(d1.coefficient({0, 1, 2}) == 1);
  CHECK(d1.coefficient({0, 0, 0}) == 0);
  CHECK(identical(d1, x2.truncated(4) * e.truncated(4)));

  // mixed partials commute
  std::mt19937_64 rng(616161);
  for (int t = 0; t < 10; ++t) {
    Series a = random_series(rng, 1, 6, 4);
    CHECK(identical(partial(partial(a, 1), 2), partial(partial(a, 2), 1)));
    CHECK(identical(partial(partial(a, 0), 1), partial(partial(a, 1), 0)));
  }
  CHECK_THROWS_AS(partial(Series::variable(1, 1, 1), 1), PrecisionError);
}

TEST_CASE("exp") {
  Series x1 = Series::variable(1, 5, 1);
  Series x2 = Series::variable(1, 5, 2);
  Series e = exp(x1 * x2);
  // 1 + x1 x2 + (x1 x2)^2/2 below degree 5
  CHECK(e.coefficient({0, 0, 0}) == 1);
  CHECK(e.coefficient({0, 1, 1}) == 1);
  CHECK(e.coefficient({0, 2, 2}) == Rational(1, 2));
  CHECK(e.terms().size() == 3);

  // exp(a+b) = exp(a) exp(b)
  std::mt19937_64 rng(717171);
  for (int t = 0; t < 8; ++t) {
    Series a = random_series(rng, 1, 5, 3);
    Series b = random_series(rng, 1, 5, 3);
    a = a - Series::constant(1, 5, eval_origin(a));
    b = b - Series::constant(1, 5, eval_origin(b));
    CHECK(identical(exp(a + b), exp(a) * exp(b)));
  }
  CHECK_THROWS_AS(exp(Series::constant(1, 4, 1)), DomainError);
}

TEST_CASE("inverse") {
  Series x2 = Series::variable(1, 4, 2);
  Series inv = inverse(Series::constant(1, 4, 1) + x2);
  // 1 - x2 + x2^2 - x2^3
  CHECK(inv.coefficient({0, 0, 0}) == 1);
  CHECK(inv.coefficient({0, 0, 1}) == -1);
  CHECK(inv.coefficient({0, 0, 2}) == 1);
  CHECK(inv.coefficient({0, 0, 3}) == -1);

  std::mt19937_64 rng(818181);
  for (int t = 0; t < 8; ++t) {
    Series a = random_series(rng, 1, 5, 3) + Series::constant(1, 5, Rational(3, 2));
    CHECK(identical(inverse(a) * a, Series::constant(1, 5, 1)));
  }
  CHECK_THROWS_AS(inverse(Series::variable(1, 4, 1)), DomainError);
}

TEST_CASE("division by z") {
  Series z = Series::variable(1, 5, 0);
  std::mt19937_64 rng(919191);
  for (int t = 0; t < 8; ++t) {
    Series a = random_series(rng, 1, 5, 3);
    Series q = div_z(z * a);
    CHECK(q.precision() == 4);
    CHECK(agree(q, a));
  }

  Series bad = Series::variable(1, 5, 1) + z;  // x1 + z
  try {
    div_z(bad);
    CHECK(false);
  } catch (const DivisibilityError& e) {
    CHECK(e.witness == Exponent{0, 1, 0});
  }
}

TEST_CASE("z order and restriction") {
  Series z = Series::variable(1, 6, 0);
  Series x1 = Series::variable(1, 6, 1);
  CHECK(z_order(Series(1, 6)) == std::nullopt);
  CHECK(z_order(x1) == 0);
  CHECK(z_order(z * z * x1) == 2);
  CHECK(z_order(z + z * z) == 1);

  Series s = x1 + z * x1 + Series::constant(1, 6, 3);
  CHECK(identical(restrict_z0(s), x1 + Series::constant(1, 6, 3)));
  CHECK(eval_origin(s) == 3);
  CHECK(is_z_free(x1 + Series::constant(1, 6, 3)));
  CHECK_FALSE(is_z_free(s));
}

TEST_CASE("agree vs identical") {
  Series a = Series::variable(1, 6, 1);
  Series b = Series::variable(1, 3, 1);
  CHECK(agree(a, b));
  CHECK_FALSE(identical(a, b));  // different precision

  Series c = b + Series::monomial(1, 3, {0, 2, 0}, Rational(1));
  CHECK_FALSE(agree(a, c));
}
