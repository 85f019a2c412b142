#pragma once

#include <vector>

#include "contactkit/exterior.hpp"
#include "contactkit/pfaffian.hpp"

namespace contactkit {

// Germ of a 1-form in the first-type normal shape
//
//   omega = dz + alpha + z beta,
//
// alpha = sum a_i(x) dx^i (dz-free, z-free coefficients), beta = sum b_i(z,x) dx^i
// (dz-free). All derived data (d omega, the 2-form mu used by the inversion
// formula, the contact defect H, the skew matrix W and its Pfaffian) is
// computed once at construction; instances are immutable and safe to share.
class ContactGerm {
 public:
  ContactGerm(const Form& alpha, const Form& beta);

  int k() const { return k_; }
  int precision() const { return precision_; }

  const Form& alpha() const { return alpha_; }
  const Form& beta() const { return beta_; }
  const Form& omega() const { return omega_; }
  const Form& domega() const { return domega_; }

  // mu = d alpha + z d beta - alpha ^ d/dz(z beta).
  const Form& mu() const { return mu_; }

  // Contact defect H with omega ^ (d omega)^k = H vol.
  const Series& defect() const { return defect_; }

  const SkewMatrix& w_matrix() const { return w_; }
  const Series& pf_w() const { return pf_w_; }

  // eta_m = a_m + z b_m, coefficient of dx^m in alpha + z beta (1 <= m <= 2k).
  const Series& eta(int m) const;
  Series alpha_coeff(int m) const;
  Series beta_coeff(int m) const;

  // True when H(0) = 0 (a Martinet locus passes through the origin).
  bool singular_at_origin() const;

 private:
  int k_;
  int precision_;
  Form alpha_, beta_;
  Form omega_, domega_, mu_;
  Series defect_;
  std::vector<Series> eta_;
  SkewMatrix w_;
  Series pf_w_;
};

// W entries xi_{ij} = d eta_i/dx^j - d eta_j/dx^i + eta_i d eta_j/dz
//                   - eta_j d eta_i/dz (1-based i, j mapped to 0-based slots).
SkewMatrix build_w(const ContactGerm& germ);

// Right-hand side d_l = eta_l df/dz - f d eta_l/dz - df/dx^l, l = 1..2k.
std::vector<Series> build_d_vector(const ContactGerm& germ, const Series& f);

// Checks dz ^ mu^k = (-1)^k k! pf(W) vol at working precision.
bool two_form_matrix_bridge(const ContactGerm& germ);

}  // namespace contactkit
