#pragma once

#include <map>
#include <vector>

#include "contactkit/series.hpp"

namespace contactkit {

// Strictly increasing tuple of basis covector indices; 0 = dz, i = dx^i.
using IndexTuple = std::vector<int>;

// Differential p-form with Series coefficients on the strictly increasing
// basis. All coefficients share the form's k and are stored truncated to the
// form's precision; zero coefficients are never stored.
class Form {
 public:
  using TermMap = std::map<IndexTuple, Series>;

  Form(int k, int degree, int precision);

  int k() const { return k_; }
  int degree() const { return degree_; }
  int precision() const { return precision_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulate c * e_I. The tuple must be strictly increasing with entries in
  // [0, 2k]; the series is truncated to the form's precision.
  void add_term(const IndexTuple& idx, const Series& c);

  Series coefficient(const IndexTuple& idx) const;
  Form with_precision(int precision) const;  // lower only

 private:
  int k_;
  int degree_;
  int precision_;
  TermMap terms_;
};

// Polynomial vector field sum_v c_v d/dx^v; component 0 is the d/dz slot.
// Components share k and are truncated to a common precision.
class VectorField {
 public:
  VectorField(int k, int precision);  // zero field
  VectorField(int k, int precision, std::vector<Series> components);

  int k() const { return k_; }
  int precision() const { return precision_; }
  const Series& component(int v) const { return components_[v]; }
  const std::vector<Series>& components() const { return components_; }

  void set_component(int v, const Series& c);

 private:
  int k_;
  int precision_;
  std::vector<Series> components_;
};

Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator-(const Form& a);
Form operator*(const Series& c, const Form& a);
Form operator*(const Rational& c, const Form& a);

Form wedge(const Form& a, const Form& b);

// Exterior derivative; precision drops by one.
Form ext_d(const Form& a);

// Exterior derivative along x1..x2k only (z treated as a parameter).
Form ext_d_prime(const Form& a);

// Interior product (contraction in the first slot); requires deg a >= 1.
Form interior(const VectorField& x, const Form& a);

// Cartan formula i_X d + d i_X; precision drops by one.
Form lie_derivative(const VectorField& x, const Form& a);

// Coefficientwise d/dz; precision drops by one.
Form partial_z_form(const Form& a);

// n-fold wedge power; n = 0 yields the constant-1 0-form. Requires even
// degree or n <= 1.
Form form_power(const Form& a, int n);

// Pullback to S = {z = 0}: drop dz components, restrict coefficients to z = 0.
Form restrict_form_S(const Form& a);

// True when every coefficient (dz components included) has z_order >= 1.
// Coefficient-level vanishing along S, not the pullback.
bool vanishes_along_S(const Form& a);

Form dz_form(int k, int precision);
Form coordinate_form(int k, int precision, int var);  // d x^var (var 0 = dz)
VectorField z_field(int k, int precision);            // d/dz

// Coefficient of the volume form dz^dx1^...^dx2k; requires deg = 2k+1.
Series top_coefficient(const Form& a);

// Coefficient of a 0-form.
Series scalar_part(const Form& a);

bool agree(const Form& a, const Form& b);
bool agree(const VectorField& a, const VectorField& b);

}  // namespace contactkit
