#pragma once

#include <vector>

#include "contactkit/series.hpp"

namespace contactkit {

// Skew-symmetric matrix of Series entries, even size n = 2k. Skewness holds
// by construction: only the upper triangle is settable.
class SkewMatrix {
 public:
  SkewMatrix(int n, int k, int precision);

  int n() const { return n_; }
  int k() const { return k_; }
  int precision() const { return precision_; }

  // i < j; stores entries (i,j) = c and (j,i) = -c.
  void set_upper(int i, int j, const Series& c);

  const Series& entry(int i, int j) const;

 private:
  int n_;
  int k_;
  int precision_;
  std::vector<Series> entries_;  // row-major n*n
};

// Pfaffian via recursive cofactor expansion along the least active index,
// memoized on index subsets. pf of the empty matrix is 1.
Series pf(const SkewMatrix& w);

// Same value, top-level expansion pinned to the given row (pivot-row
// independence check).
Series pf_expand_along(const SkewMatrix& w, int row);

// Pfaffian of the submatrix with row/column i and j removed (i != j).
Series pf_minor(const SkewMatrix& w, int i, int j);

// Determinant of a skew matrix: pf(W)^2.
Series det_skew(const SkewMatrix& w);

// Laplace-expansion determinant of a general square Series matrix (memoized
// on column subsets). Used for minor determinants in the cofactor identity.
Series det_laplace(const std::vector<std::vector<Series>>& m, int k, int precision);

// Checks (-1)^{i+j} det(W with row i, column j deleted)
//      = (-1)^{i+j+1+H(i-j)} pf(W_ij) pf(W)   (H = Heaviside, 0-based i != j).
bool cofactor_identity_check(const SkewMatrix& w, int i, int j);

// Raw-matrix variant that does not assume skewness; lets tests feed a
// deliberately corrupted matrix and watch the identity break.
bool cofactor_identity_raw(const std::vector<std::vector<Series>>& m, int i, int j,
                           int k, int precision);

}  // namespace contactkit
