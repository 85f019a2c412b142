#include "contactkit/exterior.hpp"

#include <algorithm>

namespace contactkit {

namespace {

void validate_tuple(const IndexTuple& idx, int degree, int k) {
  if (static_cast<int>(idx.size()) != degree) throw MismatchError("index tuple length != degree");
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (idx[r] < 0 || idx[r] > 2 * k) throw MismatchError("covector index out of range");
    if (r > 0 && idx[r - 1] >= idx[r]) throw MismatchError("index tuple not strictly increasing");
  }
}

void require_same_k(int ka, int kb) {
  if (ka != kb) throw MismatchError("operands over different coordinate counts");
}

}  // namespace

Form::Form(int k, int degree, int precision) : k_(k), degree_(degree), precision_(precision) {
  if (k < 1) throw DomainError("form needs k >= 1");
  if (degree < 0) throw MismatchError("negative form degree");
  if (precision < 1) throw PrecisionError("form needs precision >= 1");
}

void Form::add_term(const IndexTuple& idx, const Series& c) {
  validate_tuple(idx, degree_, k_);
  require_same_k(c.k(), k_);
  if (c.precision() < precision_) throw MismatchError("coefficient precision below form precision");
  Series t = c.truncated(precision_);
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    if (!t.is_zero()) terms_.emplace(idx, std::move(t));
  } else {
    Series sum = it->second + t;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(sum);
  }
}

Series Form::coefficient(const IndexTuple& idx) const {
  validate_tuple(idx, degree_, k_);
  auto it = terms_.find(idx);
  return it == terms_.end() ? Series(k_, precision_) : it->second;
}

Form Form::with_precision(int precision) const {
  if (precision > precision_) throw DomainError("cannot raise certified precision");
  Form f(k_, degree_, precision);
  for (const auto& [idx, c] : terms_) {
    Series t = c.truncated(precision);
    if (!t.is_zero()) f.terms_.emplace(idx, std::move(t));
  }
  return f;
}

VectorField::VectorField(int k, int precision) : k_(k), precision_(precision) {
  if (k < 1) throw DomainError("vector field needs k >= 1");
  if (precision < 1) throw PrecisionError("vector field needs precision >= 1");
  components_.assign(2 * k + 1, Series(k, precision));
}

VectorField::VectorField(int k, int precision, std::vector<Series> components)
    : VectorField(k, precision) {
  if (static_cast<int>(components.size()) != 2 * k + 1)
    throw MismatchError("vector field needs 2k+1 components");
  for (int v = 0; v <= 2 * k; ++v) set_component(v, components[v]);
}

void VectorField::set_component(int v, const Series& c) {
  if (v < 0 || v > 2 * k_) throw MismatchError("component index out of range");
  require_same_k(c.k(), k_);
  if (c.precision() < precision_) throw MismatchError("component precision below field precision");
  components_[v] = c.truncated(precision_);
}

Form operator+(const Form& a, const Form& b) {
  require_same_k(a.k(), b.k());
  if (a.degree() != b.degree()) throw MismatchError("adding forms of different degree");
  Form r(a.k(), a.degree(), std::min(a.precision(), b.precision()));
  for (const auto& [idx, c] : a.terms()) r.add_term(idx, c);
  for (const auto& [idx, c] : b.terms()) r.add_term(idx, c);
  return r;
}

Form operator-(const Form& a, const Form& b) { return a + Rational(-1) * b; }

Form operator-(const Form& a) { return Rational(-1) * a; }

Form operator*(const Series& c, const Form& a) {
  require_same_k(c.k(), a.k());
  Form r(a.k(), a.degree(), std::min(c.precision(), a.precision()));
  for (const auto& [idx, v] : a.terms()) r.add_term(idx, (c * v).truncated(r.precision()));
  return r;
}

Form operator*(const Rational& c, const Form& a) {
  Form r(a.k(), a.degree(), a.precision());
  if (c == 0) return r;
  for (const auto& [idx, v] : a.terms()) r.add_term(idx, c * v);
  return r;
}

Form wedge(const Form& a, const Form& b) {
  require_same_k(a.k(), b.k());
  Form r(a.k(), a.degree() + b.degree(), std::min(a.precision(), b.precision()));
  IndexTuple merged;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      // Merge the two increasing tuples, counting transpositions; a shared
      // index kills the term.
      merged.clear();
      int inversions = 0;
      std::size_t p = 0, q = 0;
      bool collide = false;
      while (p < ia.size() && q < ib.size()) {
        if (ia[p] == ib[q]) {
          collide = true;
          break;
        }
        if (ia[p] < ib[q]) {
          merged.push_back(ia[p++]);
        } else {
          inversions += static_cast<int>(ia.size() - p);
          merged.push_back(ib[q++]);
        }
      }
      if (collide) continue;
      while (p < ia.size()) merged.push_back(ia[p++]);
      while (q < ib.size()) merged.push_back(ib[q++]);
      Series prod = (ca * cb).truncated(r.precision());
      r.add_term(merged, inversions % 2 == 0 ? prod : -prod);
    }
  }
  return r;
}

namespace {

Form ext_d_over(const Form& a, int first_var) {
  Form r(a.k(), a.degree() + 1, a.precision() - 1);
  IndexTuple extended;
  for (const auto& [idx, c] : a.terms()) {
    for (int v = first_var; v <= 2 * a.k(); ++v) {
      if (std::find(idx.begin(), idx.end(), v) != idx.end()) continue;
      Series dc = partial(c, v);
      if (dc.is_zero()) continue;
      auto pos = std::lower_bound(idx.begin(), idx.end(), v);
      extended.assign(idx.begin(), idx.end());
      extended.insert(extended.begin() + (pos - idx.begin()), v);
      int sign = static_cast<int>(pos - idx.begin());
      r.add_term(extended, sign % 2 == 0 ? dc : -dc);
    }
  }
  return r;
}

}  // namespace

Form ext_d(const Form& a) { return ext_d_over(a, 0); }

Form ext_d_prime(const Form& a) { return ext_d_over(a, 1); }

Form interior(const VectorField& x, const Form& a) {
  require_same_k(x.k(), a.k());
  if (a.degree() < 1) throw DomainError("interior product needs a form of degree >= 1");
  Form r(a.k(), a.degree() - 1, std::min(x.precision(), a.precision()));
  IndexTuple reduced;
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Series& comp = x.component(idx[pos]);
      if (comp.is_zero()) continue;
      reduced.assign(idx.begin(), idx.end());
      reduced.erase(reduced.begin() + pos);
      Series prod = (comp * c).truncated(r.precision());
      r.add_term(reduced, pos % 2 == 0 ? prod : -prod);
    }
  }
  return r;
}

Form lie_derivative(const VectorField& x, const Form& a) {
  if (a.degree() == 0) return interior(x, ext_d(a));
  return interior(x, ext_d(a)) + ext_d(interior(x, a));
}

Form partial_z_form(const Form& a) {
  Form r(a.k(), a.degree(), a.precision() - 1);
  for (const auto& [idx, c] : a.terms()) {
    Series dc = partial(c, 0);
    if (!dc.is_zero()) r.add_term(idx, dc);
  }
  return r;
}

Form form_power(const Form& a, int n) {
  if (n < 0) throw DomainError("negative form power");
  if (n == 0) {
    Form one(a.k(), 0, a.precision());
    one.add_term({}, Series::constant(a.k(), a.precision(), 1));
    return one;
  }
  if (n > 1 && a.degree() % 2 != 0) throw DomainError("power of an odd-degree form");
  Form r = a;
  for (int i = 1; i < n; ++i) r = wedge(r, a);
  return r;
}

Form restrict_form_S(const Form& a) {
  Form r(a.k(), a.degree(), a.precision());
  for (const auto& [idx, c] : a.terms()) {
    if (!idx.empty() && idx[0] == 0) continue;  // dz component
    Series t = restrict_z0(c);
    if (!t.is_zero()) r.add_term(idx, t);
  }
  return r;
}

bool vanishes_along_S(const Form& a) {
  for (const auto& [idx, c] : a.terms()) {
    if (!restrict_z0(c).is_zero()) return false;
  }
  return true;
}

Form dz_form(int k, int precision) { return coordinate_form(k, precision, 0); }

Form coordinate_form(int k, int precision, int var) {
  Form f(k, 1, precision);
  if (var < 0 || var > 2 * k) throw MismatchError("covector index out of range");
  f.add_term({var}, Series::constant(k, precision, 1));
  return f;
}

VectorField z_field(int k, int precision) {
  VectorField z(k, precision);
  z.set_component(0, Series::constant(k, precision, 1));
  return z;
}

Series top_coefficient(const Form& a) {
  if (a.degree() != 2 * a.k() + 1) throw MismatchError("top coefficient needs a top-degree form");
  IndexTuple all(2 * a.k() + 1);
  for (int v = 0; v <= 2 * a.k(); ++v) all[v] = v;
  return a.coefficient(all);
}

Series scalar_part(const Form& a) {
  if (a.degree() != 0) throw MismatchError("scalar part needs a 0-form");
  return a.coefficient({});
}

bool agree(const Form& a, const Form& b) {
  require_same_k(a.k(), b.k());
  if (a.degree() != b.degree()) throw MismatchError("comparing forms of different degree");
  int p = std::min(a.precision(), b.precision());
  Form ta = a.with_precision(p), tb = b.with_precision(p);
  if (ta.terms().size() != tb.terms().size()) return false;
  auto ia = ta.terms().begin();
  auto ib = tb.terms().begin();
  for (; ia != ta.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first || !identical(ia->second, ib->second)) return false;
  }
  return true;
}

bool agree(const VectorField& a, const VectorField& b) {
  require_same_k(a.k(), b.k());
  for (int v = 0; v <= 2 * a.k(); ++v) {
    if (!agree(a.component(v), b.component(v))) return false;
  }
  return true;
}

}  // namespace contactkit
