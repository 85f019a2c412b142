#include "contactkit/series.hpp"

#include <algorithm>

namespace contactkit {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += static_cast<int>(v);
  return d;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational rational_from_parts(const std::string& num, const std::string& den) {
  Int n, d;
  try {
    n = Int(num);
    d = Int(den);
  } catch (const std::exception&) {
    throw DomainError("malformed integer literal in rational: " + num + "/" + den);
  }
  if (d == 0) throw DomainError("zero denominator in rational: " + num + "/" + den);
  return Rational(n, d);
}

Series::Series(int k, int precision) : k_(k), precision_(precision) {
  if (k < 1) throw DomainError("series needs k >= 1");
  if (precision < 1) throw PrecisionError("series needs precision >= 1");
}

Series Series::constant(int k, int precision, const Rational& c) {
  Series s(k, precision);
  if (c != 0) s.terms_.emplace(Exponent(2 * k + 1, 0), c);
  return s;
}

Series Series::variable(int k, int precision, int var) {
  Series s(k, precision);
  if (var < 0 || var > 2 * k) throw MismatchError("variable index out of range");
  Exponent e(2 * k + 1, 0);
  e[var] = 1;
  if (precision > 1) s.terms_.emplace(std::move(e), Rational(1));
  return s;
}

Series Series::monomial(int k, int precision, const Exponent& e, const Rational& c) {
  Series s(k, precision);
  s.add_term(e, c);
  return s;
}

void Series::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars()) throw MismatchError("exponent length != 2k+1");
  if (c == 0 || total_degree(e) >= precision_) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Series::coefficient(const Exponent& e) const {
  if (static_cast<int>(e.size()) != num_vars()) throw MismatchError("exponent length != 2k+1");
  if (total_degree(e) >= precision_)
    throw DomainError("coefficient not certified at this precision");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Series Series::truncated(int precision) const {
  if (precision < 1) throw PrecisionError("truncation below precision 1");
  if (precision > precision_) throw DomainError("cannot raise certified precision");
  Series s(k_, precision);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) >= precision) break;  // graded order: all later terms too big
    s.terms_.emplace(e, c);
  }
  return s;
}

namespace {

void require_same_k(const Series& a, const Series& b) {
  if (a.k() != b.k()) throw MismatchError("series over different coordinate counts");
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
  require_same_k(a, b);
  Series r(a.k(), std::min(a.precision(), b.precision()));
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

Series operator-(const Series& a, const Series& b) {
  require_same_k(a, b);
  Series r(a.k(), std::min(a.precision(), b.precision()));
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

Series operator-(const Series& a) { return Rational(-1) * a; }

Series operator*(const Series& a, const Series& b) {
  require_same_k(a, b);
  int d = std::min(a.precision(), b.precision());
  Series r(a.k(), d);
  int nv = a.num_vars();
  Exponent e(nv, 0);
  for (const auto& [ea, ca] : a.terms()) {
    int da = total_degree(ea);
    if (da >= d) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= d) break;
      for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Series operator*(const Rational& c, const Series& a) {
  Series r(a.k(), a.precision());
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms()) r.add_term(e, c * v);
  return r;
}

Series partial(const Series& a, int var) {
  if (var < 0 || var > 2 * a.k()) throw MismatchError("variable index out of range");
  if (a.precision() - 1 < 1) throw PrecisionError("derivative exhausts certified precision");
  Series r(a.k(), a.precision() - 1);
  for (const auto& [e, c] : a.terms()) {
    if (e[var] == 0) continue;
    Exponent down = e;
    --down[var];
    r.add_term(down, Rational(e[var]) * c);
  }
  return r;
}

Series exp(const Series& a) {
  if (eval_origin(a) != 0) throw DomainError("exp needs a vanishing constant term");
  Series result = Series::constant(a.k(), a.precision(), 1);
  Series term = result;
  for (int n = 1; n < a.precision(); ++n) {
    term = Rational(1, n) * (term * a);
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

Series inverse(const Series& a) {
  Rational c0 = eval_origin(a);
  if (c0 == 0) throw DomainError("inverse needs a nonzero constant term");
  // a = c0 (1 - u) with u(0) = 0, so 1/a = (1/c0) sum u^n.
  Series u = Rational(1) / c0 * (Series::constant(a.k(), a.precision(), c0) - a);
  Series result = Series::constant(a.k(), a.precision(), 1);
  Series term = result;
  for (int n = 1; n < a.precision(); ++n) {
    term = term * u;
    if (term.is_zero()) break;
    result = result + term;
  }
  return Rational(1) / c0 * result;
}

Series div_z(const Series& a) {
  if (a.precision() - 1 < 1) throw PrecisionError("z-division exhausts certified precision");
  for (const auto& [e, c] : a.terms()) {
    if (e[0] == 0) throw DivisibilityError("series is not divisible by z", e);
  }
  Series r(a.k(), a.precision() - 1);
  for (const auto& [e, c] : a.terms()) {
    Exponent down = e;
    --down[0];
    r.add_term(down, c);
  }
  return r;
}

std::optional<int> z_order(const Series& a) {
  std::optional<int> best;
  for (const auto& [e, c] : a.terms()) {
    int o = static_cast<int>(e[0]);
    if (!best || o < *best) best = o;
    if (*best == 0) break;
  }
  return best;
}

Series restrict_z0(const Series& a) {
  Series r(a.k(), a.precision());
  for (const auto& [e, c] : a.terms()) {
    if (e[0] == 0) r.add_term(e, c);
  }
  return r;
}

Rational eval_origin(const Series& a) {
  auto it = a.terms().find(Exponent(a.num_vars(), 0));
  return it == a.terms().end() ? Rational(0) : it->second;
}

bool is_z_free(const Series& a) {
  for (const auto& [e, c] : a.terms()) {
    if (e[0] != 0) return false;
  }
  return true;
}

bool agree(const Series& a, const Series& b) {
  require_same_k(a, b);
  int p = std::min(a.precision(), b.precision());
  return a.truncated(p).terms() == b.truncated(p).terms();
}

bool identical(const Series& a, const Series& b) {
  return a.k() == b.k() && a.precision() == b.precision() && a.terms() == b.terms();
}

}  // namespace contactkit
