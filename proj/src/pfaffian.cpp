#include "contactkit/pfaffian.hpp"

#include <cstdint>
#include <map>

namespace contactkit {

SkewMatrix::SkewMatrix(int n, int k, int precision) : n_(n), k_(k), precision_(precision) {
  if (n < 0 || n % 2 != 0) throw MismatchError("skew matrix size must be even");
  if (n > 62) throw MismatchError("skew matrix too large");
  entries_.assign(static_cast<std::size_t>(n) * n, Series(k, precision));
}

void SkewMatrix::set_upper(int i, int j, const Series& c) {
  if (i < 0 || j <= i || j >= n_) throw MismatchError("set_upper needs 0 <= i < j < n");
  if (c.k() != k_) throw MismatchError("entry over different coordinate count");
  if (c.precision() < precision_) throw MismatchError("entry precision below matrix precision");
  entries_[static_cast<std::size_t>(i) * n_ + j] = c.truncated(precision_);
  entries_[static_cast<std::size_t>(j) * n_ + i] = -c.truncated(precision_);
}

const Series& SkewMatrix::entry(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw MismatchError("matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * n_ + j];
}

namespace {

using Mask = std::uint64_t;
using Memo = std::map<Mask, Series>;

// Entry accessor shared by the skew and raw paths; the recursion only ever
// reads positions (p, q) with p < q.
template <typename EntryFn>
Series pf_mask(Mask mask, int k, int precision, const EntryFn& entry, Memo& memo) {
  if (mask == 0) return Series::constant(k, precision, 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  int p = 0;
  while (!(mask & (Mask(1) << p))) ++p;
  Mask rest = mask & ~(Mask(1) << p);
  Series sum(k, precision);
  int ordinal = 0;  // position of q among the remaining active indices
  for (int q = p + 1; q < 64; ++q) {
    if (!(rest & (Mask(1) << q))) continue;
    const Series& e = entry(p, q);
    if (!e.is_zero()) {
      Series sub = pf_mask(rest & ~(Mask(1) << q), k, precision, entry, memo);
      Series term = e * sub;
      sum = ordinal % 2 == 0 ? sum + term : sum - term;
    }
    ++ordinal;
  }
  memo.emplace(mask, sum);
  return sum;
}

Mask full_mask(int n) { return n == 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

// det over columns in `mask` using rows r, r+1, ...; memoized on the column
// mask (the row is determined by how many columns are already consumed).
Series det_mask(const std::vector<std::vector<Series>>& m, int r, Mask mask, int k,
                int precision, Memo& memo) {
  if (mask == 0) return Series::constant(k, precision, 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  Series sum(k, precision);
  int ordinal = 0;
  for (int c = 0; c < 64; ++c) {
    if (!(mask & (Mask(1) << c))) continue;
    if (!m[r][c].is_zero()) {
      Series sub = det_mask(m, r + 1, mask & ~(Mask(1) << c), k, precision, memo);
      Series term = m[r][c] * sub;
      sum = ordinal % 2 == 0 ? sum + term : sum - term;
    }
    ++ordinal;
  }
  memo.emplace(mask, sum);
  return sum;
}

std::vector<std::vector<Series>> matrix_of(const SkewMatrix& w) {
  std::vector<std::vector<Series>> m;
  m.reserve(w.n());
  for (int i = 0; i < w.n(); ++i) {
    std::vector<Series> row;
    row.reserve(w.n());
    for (int j = 0; j < w.n(); ++j) row.push_back(w.entry(i, j));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<Series>> delete_row_col(const std::vector<std::vector<Series>>& m,
                                                int i, int j) {
  std::vector<std::vector<Series>> out;
  out.reserve(m.size() - 1);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (static_cast<int>(r) == i) continue;
    std::vector<Series> row;
    row.reserve(m.size() - 1);
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (static_cast<int>(c) == j) continue;
      row.push_back(m[r][c]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <typename EntryFn>
bool cofactor_identity_impl(const std::vector<std::vector<Series>>& m, const EntryFn& entry,
                            int i, int j, int k, int precision) {
  int n = static_cast<int>(m.size());
  if (i == j) throw DomainError("cofactor identity needs i != j");
  if (i < 0 || i >= n || j < 0 || j >= n) throw MismatchError("matrix index out of range");
  if (n % 2 != 0) throw MismatchError("cofactor identity needs even size");

  Series det_minor = det_laplace(delete_row_col(m, i, j), k, precision);
  Series lhs = (i + j) % 2 == 0 ? det_minor : -det_minor;

  Memo memo;
  Series pf_full = pf_mask(full_mask(n), k, precision, entry, memo);
  Mask sub = full_mask(n) & ~(Mask(1) << i) & ~(Mask(1) << j);
  Series pf_sub = pf_mask(sub, k, precision, entry, memo);
  int sign = i + j + 1 + (i > j ? 1 : 0);
  Series rhs = pf_sub * pf_full;
  if (sign % 2 != 0) rhs = -rhs;

  return agree(lhs, rhs);
}

}  // namespace

Series pf(const SkewMatrix& w) {
  Memo memo;
  auto entry = [&w](int i, int j) -> const Series& { return w.entry(i, j); };
  return pf_mask(full_mask(w.n()), w.k(), w.precision(), entry, memo);
}

Series pf_expand_along(const SkewMatrix& w, int row) {
  if (row < 0 || row >= w.n()) throw MismatchError("expansion row out of range");
  if (w.n() == 0) return Series::constant(w.k(), w.precision(), 1);
  Memo memo;
  auto entry = [&w](int i, int j) -> const Series& { return w.entry(i, j); };
  Mask rest = full_mask(w.n()) & ~(Mask(1) << row);
  Series sum(w.k(), w.precision());
  for (int q = 0; q < w.n(); ++q) {
    if (q == row) continue;
    Series sub = pf_mask(rest & ~(Mask(1) << q), w.k(), w.precision(), entry, memo);
    Series term = w.entry(row, q) * sub;
    int sign = row + q + 1 + (row > q ? 1 : 0);
    sum = sign % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

Series pf_minor(const SkewMatrix& w, int i, int j) {
  if (i == j) throw DomainError("pf_minor needs i != j");
  if (i < 0 || i >= w.n() || j < 0 || j >= w.n()) throw MismatchError("matrix index out of range");
  Memo memo;
  auto entry = [&w](int a, int b) -> const Series& { return w.entry(a, b); };
  Mask sub = full_mask(w.n()) & ~(Mask(1) << i) & ~(Mask(1) << j);
  return pf_mask(sub, w.k(), w.precision(), entry, memo);
}

Series det_skew(const SkewMatrix& w) {
  Series p = pf(w);
  return p * p;
}

Series det_laplace(const std::vector<std::vector<Series>>& m, int k, int precision) {
  int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw MismatchError("determinant needs a square matrix");
  }
  if (n > 62) throw MismatchError("matrix too large");
  Memo memo;
  return det_mask(m, 0, full_mask(n), k, precision, memo);
}

bool cofactor_identity_check(const SkewMatrix& w, int i, int j) {
  auto m = matrix_of(w);
  auto entry = [&w](int a, int b) -> const Series& { return w.entry(a, b); };
  return cofactor_identity_impl(m, entry, i, j, w.k(), w.precision());
}

bool cofactor_identity_raw(const std::vector<std::vector<Series>>& m, int i, int j, int k,
                           int precision) {
  auto entry = [&m](int a, int b) -> const Series& { return m[a][b]; };
  return cofactor_identity_impl(m, entry, i, j, k, precision);
}

}  // namespace contactkit
