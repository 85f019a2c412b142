#include <random>

#include "contactkit/pfaffian.hpp"
#include "contactkit/selftest.hpp"
#include "doctest.h"

using namespace contactkit;

namespace {

SkewMatrix random_skew(std::mt19937_64& rng, int n) {
  SkewMatrix w(n, 1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int num = static_cast<int>(rng() % 11) - 5;
      int den = 1 + static_cast<int>(rng() % 5);
      w.set_upper(i, j, Series::constant(1, 2, Rational(num, den)));
    }
  return w;
}

std::vector<std::vector<Series>> matrix_of(const SkewMatrix& w) {
  std::vector<std::vector<Series>> m(w.n(), std::vector<Series>(w.n(), Series(w.k(), w.precision())));
  for (int i = 0; i < w.n(); ++i)
    for (int j = 0; j < w.n(); ++j) m[i][j] = w.entry(i, j);
  return m;
}

}  // namespace

TEST_CASE("pfaffian closed forms") {
  // n = 0: pf = 1; n = 2: pf = a01
  SkewMatrix w0(0, 1, 3);
  CHECK(pf(w0).coefficient({0, 0, 0}) == 1);

  SkewMatrix w2(2, 1, 3);
  w2.set_upper(0, 1, Series::constant(1, 3, Rational(7, 2)));
  CHECK(pf(w2).coefficient({0, 0, 0}) == Rational(7, 2));

  // n = 4 with symbolic entries: pf = a01 a23 - a02 a13 + a03 a12
  int k = 3, p = 3;
  SkewMatrix w4(4, k, p);
  std::vector<Series> v;
  for (int m = 1; m <= 6; ++m) v.push_back(Series::variable(k, p, m));
  w4.set_upper(0, 1, v[0]);
  w4.set_upper(0, 2, v[1]);
  w4.set_upper(0, 3, v[2]);
  w4.set_upper(1, 2, v[3]);
  w4.set_upper(1, 3, v[4]);
  w4.set_upper(2, 3, v[5]);
  Series expect = v[0] * v[5] - v[1] * v[4] + v[2] * v[3];
  CHECK(identical(pf(w4), expect));
  CHECK(identical(det_skew(w4), expect * expect));
}

TEST_CASE("pfaffian against the matching-sum oracle") {
  std::mt19937_64 rng(232323);
  for (int n : {2, 4, 6, 8}) {
    for (int t = 0; t < 10; ++t) {
      SkewMatrix w = random_skew(rng, n);
      Series p = pf(w);
      CHECK(identical(p, pf_reference(w)));
      for (int r = 0; r < n; ++r) CHECK(identical(pf_expand_along(w, r), p));

      std::vector<Series> flat;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.push_back(w.entry(i, j));
      CHECK(agree(p * p, det_reference(flat, n, 1, 2)));
      CHECK(agree(det_skew(w), det_reference(flat, n, 1, 2)));
    }
  }
}

TEST_CASE("laplace determinant") {
  std::mt19937_64 rng(242424);
  for (int n : {1, 2, 3, 4}) {
    for (int t = 0; t < 6; ++t) {
      std::vector<std::vector<Series>> m(n, std::vector<Series>(n, Series(1, 2)));
      std::vector<Series> flat;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int num = static_cast<int>(rng() % 9) - 4;
          m[i][j] = Series::constant(1, 2, Rational(num, 1 + static_cast<int>(rng() % 3)));
          flat.push_back(m[i][j]);
        }
      CHECK(identical(det_laplace(m, 1, 2), det_reference(flat, n, 1, 2)));
    }
  }
}

TEST_CASE("cofactor identity") {
  std::mt19937_64 rng(252525);
  for (int n : {2, 4, 6}) {
    for (int t = 0; t < 5; ++t) {
      SkewMatrix w = random_skew(rng, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) CHECK(cofactor_identity_check(w, i, j));
    }
  }
}

TEST_CASE("cofactor identity breaks when skewness is corrupted") {
  // fixed 4x4 matrix, then a lower-triangle entry is bumped; the pfaffian
  // recursion never reads the lower triangle, so the two sides separate
  SkewMatrix w(4, 1, 3);
  w.set_upper(0, 1, Series::constant(1, 3, 1));
  w.set_upper(0, 2, Series::constant(1, 3, 2));
  w.set_upper(0, 3, Series::constant(1, 3, 3));
  w.set_upper(1, 2, Series::constant(1, 3, 4));
  w.set_upper(1, 3, Series::constant(1, 3, 5));
  w.set_upper(2, 3, Series::constant(1, 3, 6));

  auto m = matrix_of(w);
  CHECK(cofactor_identity_raw(m, 0, 1, 1, 3));
  CHECK(cofactor_identity_raw(m, 2, 3, 1, 3));

  m[2][0] = m[2][0] + Series::constant(1, 3, 1);  // now m is not skew
  CHECK_FALSE(cofactor_identity_raw(m, 0, 1, 1, 3));
}
