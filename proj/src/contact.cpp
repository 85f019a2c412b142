#include "contactkit/contact.hpp"

#include <algorithm>

namespace contactkit {

namespace {

Form as_zero_form(const Series& f) {
  Form g(f.k(), 0, f.precision());
  g.add_term({}, f);
  return g;
}

Form d_full(const Series& f) { return ext_d(as_zero_form(f)); }
Form d_prime(const Series& f) { return ext_d_prime(as_zero_form(f)); }

// f d omega + omega ^ df, the 2-form driving the inversion formula.
Form hamilton_two_form(const ContactGerm& g, const Series& f) {
  return f * g.domega() + wedge(g.omega(), d_full(f));
}

IndexTuple tuple_missing(int k, int m) {
  IndexTuple t;
  t.reserve(2 * k - 1);
  for (int i = 1; i <= 2 * k; ++i) {
    if (i != m) t.push_back(i);
  }
  return t;
}

// Graded-lex-least certified monomial with zero z-exponent, if any.
std::optional<Exponent> z_free_witness(const Series& s) {
  for (const auto& [e, c] : s.terms()) {
    if (e[0] == 0) return e;
  }
  return std::nullopt;
}

}  // namespace

Series contact_defect(const Form& eta) {
  if (eta.degree() != 1) throw MismatchError("contact defect needs a 1-form");
  return top_coefficient(wedge(eta, form_power(ext_d(eta), eta.k())));
}

OriginClass structurally_smooth_origin(const Series& h) {
  if (eval_origin(h) != 0) return OriginClass::contact_point;
  if (h.precision() < 2)
    throw PrecisionError("origin classification needs certified degree-1 coefficients");
  for (int v = 0; v <= 2 * h.k(); ++v) {
    Exponent e(h.num_vars(), 0);
    e[v] = 1;
    if (h.coefficient(e) != 0) return OriginClass::smooth_singular;
  }
  return OriginClass::not_smooth;
}

RealizabilityResult realizability_check(const ContactGerm& germ) {
  int k = germ.k();
  Form da = ext_d(germ.alpha());
  Form beta0 = restrict_form_S(germ.beta());
  Form db0 = ext_d(beta0);

  RealizabilityResult r;
  r.cond1 = agree(form_power(da, k),
                  Rational(k) * wedge(form_power(da, k - 1), wedge(germ.alpha(), beta0)));

  Form gamma = wedge(form_power(da, k - 1), db0);
  if (k >= 2)
    gamma = gamma - Rational(k - 1) * wedge(form_power(da, k - 2),
                                            wedge(germ.alpha(), wedge(beta0, db0)));
  IndexTuple xs;
  for (int m = 1; m <= 2 * k; ++m) xs.push_back(m);
  r.cond2 = eval_origin(gamma.coefficient(xs)) != 0;
  r.certified_precision = germ.precision() - 1;
  return r;
}

Series theta(const ContactGerm& germ, const VectorField& x) {
  return scalar_part(interior(x, germ.omega()));
}

Decomposition decompose(const ContactGerm& germ, const VectorField& x) {
  if (x.k() != germ.k()) throw MismatchError("field over different coordinate count");
  std::vector<Series> s;
  s.reserve(2 * germ.k());
  for (int m = 1; m <= 2 * germ.k(); ++m) s.push_back(x.component(m));
  return Decomposition(theta(germ, x), std::move(s));
}

VectorField reassemble(const ContactGerm& germ, const Decomposition& d) {
  if (static_cast<int>(d.s.size()) != 2 * germ.k())
    throw MismatchError("decomposition needs 2k coordinate components");
  Series comp0 = d.f;
  for (int m = 1; m <= 2 * germ.k(); ++m) comp0 = comp0 - d.s[m - 1] * germ.eta(m);
  int p = comp0.precision();
  for (const auto& sm : d.s) p = std::min(p, sm.precision());
  VectorField x(germ.k(), p);
  x.set_component(0, comp0);
  for (int m = 1; m <= 2 * germ.k(); ++m) x.set_component(m, d.s[m - 1]);
  return x;
}

IcctResult icct_check(const ContactGerm& germ, const VectorField& x) {
  if (x.k() != germ.k()) throw MismatchError("field over different coordinate count");
  Series f = theta(germ, x);

  // Direct route: L_X omega is proportional to omega iff subtracting
  // (dz coefficient) * omega leaves nothing; omega is unital in dz.
  Form lie = lie_derivative(x, germ.omega());
  Series h = lie.coefficient({0});
  Form residual = lie - h * germ.omega();
  bool direct = residual.is_zero();

  // Contraction route: i_Z i_X (omega ^ d omega) = i_Z (f d omega + omega ^ df).
  VectorField z = z_field(germ.k(), germ.precision());
  Form lhs = interior(z, interior(x, wedge(germ.omega(), germ.domega())));
  Form rhs = interior(z, hamilton_two_form(germ, f));
  bool contraction = agree(lhs, rhs);

  if (direct != contraction)
    throw InternalCheckError("contact transformation criteria disagree");

  IcctResult r;
  r.verdict = direct;
  r.certified_precision = residual.precision();
  if (direct) {
    r.h = h;
  } else {
    const auto& [idx, c] = *residual.terms().begin();
    const auto& [e, v] = *c.terms().begin();
    r.witness = IcctWitness{idx, e, v};
  }
  return r;
}

MembershipCertificate membership(const ContactGerm& germ, const Series& f) {
  if (f.k() != germ.k()) throw MismatchError("function over different coordinate count");
  int k = germ.k();
  MembershipCertificate cert;

  if (!germ.singular_at_origin()) {
    // Contact point: every germ is a contact Hamiltonian, no divisibility
    // certificate applies.
    cert.verdict = true;
    cert.nonsingular_at_origin = true;
    cert.certified_precision = std::min(f.precision(), germ.precision());
    return cert;
  }

  Form psi = d_prime(f) + f * germ.beta() - partial(f, 0) * germ.alpha();
  Form nu = ext_d(germ.alpha()) - wedge(germ.alpha(), germ.beta());
  Form nu_pow = form_power(nu, k - 1);
  Form theta_form = wedge(psi, nu_pow);
  bool route_a = vanishes_along_S(theta_form);

  Form big_psi = hamilton_two_form(germ, f);
  bool route_b = true;
  for (int m = 1; m <= 2 * k; ++m) {
    Series nm = top_coefficient(
        wedge(coordinate_form(k, germ.precision(), m), wedge(big_psi, nu_pow)));
    bool div_b = restrict_z0(nm).is_zero();
    bool div_a = restrict_z0(theta_form.coefficient(tuple_missing(k, m))).is_zero();
    if (div_a != div_b) throw InternalCheckError("membership criteria disagree");
    route_b = route_b && div_b;
  }
  if (route_a != route_b) throw InternalCheckError("membership criteria disagree");

  cert.verdict = route_a;
  cert.certified_precision = theta_form.precision();
  if (route_a) {
    Form gamma(k, 2 * k - 1, theta_form.precision() - 1);
    for (const auto& [idx, c] : theta_form.terms()) gamma.add_term(idx, div_z(c));
    cert.gamma = std::move(gamma);
  } else {
    // First failing component in the lexicographic order of the basis tuples.
    for (int p = 1; p <= 2 * k; ++p) {
      int m = 2 * k - p + 1;
      IndexTuple idx = tuple_missing(k, m);
      auto w = z_free_witness(theta_form.coefficient(idx));
      if (w) {
        cert.failing_m = p;
        cert.failing_component = idx;
        cert.witness_monomial = *w;
        break;
      }
    }
  }
  return cert;
}

InvertResult invert_theta(const ContactGerm& germ, const Series& f) {
  MembershipCertificate cert = membership(germ, f);
  if (!cert.verdict)
    throw MembershipError("function is not a contact Hamiltonian at this precision", cert);

  int k = germ.k();
  Form big_psi = hamilton_two_form(germ, f);
  Form mu_pow = form_power(germ.mu(), k - 1);
  Series dc = top_coefficient(
      wedge(dz_form(k, germ.precision()), form_power(germ.mu(), k)));

  auto numerator = [&](int m) {
    return top_coefficient(wedge(coordinate_form(k, germ.precision(), m), wedge(big_psi, mu_pow)));
  };

  std::vector<Series> s;
  s.reserve(2 * k);
  if (!germ.singular_at_origin()) {
    Series dci = inverse(dc);
    for (int m = 1; m <= 2 * k; ++m) s.push_back(Rational(k) * (numerator(m) * dci));
  } else {
    Series u = [&] {
      try {
        return div_z(dc);
      } catch (const DivisibilityError&) {
        throw DomainError("volume denominator is not divisible by z: germ is not of the first type");
      }
    }();
    if (eval_origin(u) == 0)
      throw DomainError("z-reduced volume denominator is not a unit: degenerate singular germ");
    Series ui = inverse(u);
    for (int m = 1; m <= 2 * k; ++m) {
      Series nm = [&] {
        try {
          return div_z(numerator(m));
        } catch (const DivisibilityError&) {
          throw InternalCheckError("membership holds but a numerator resists z-division");
        }
      }();
      s.push_back(Rational(k) * (nm * ui));
    }
  }

  VectorField x = reassemble(germ, Decomposition(f, s));
  if (!agree(theta(germ, x), f))
    throw InternalCheckError("inverse does not reproduce its Hamiltonian");
  IcctResult chk = icct_check(germ, x);
  if (!chk.verdict)
    throw InternalCheckError("inverse is not an infinitesimal contact transformation");

  // Closed multiplier formula h = df/dz - sum s_m b_m - z sum s_m db_m/dz.
  Series h = partial(f, 0);
  Series z = Series::variable(germ.k(), germ.precision(), 0);
  for (int m = 1; m <= 2 * k; ++m) {
    const Series& bm = germ.beta_coeff(m);
    h = h - s[m - 1] * bm - z * (s[m - 1] * partial(bm, 0));
  }
  if (!agree(h, *chk.h)) throw InternalCheckError("multiplier formula disagrees with L_X omega");

  InvertResult r(std::move(x), std::move(h));
  r.certified_precision = r.x.precision();
  return r;
}

VectorField classical_inverse(const Series& f, int k) {
  if (f.k() != k) throw MismatchError("function over different coordinate count");
  Series fz = partial(f, 0);
  Series comp0 = f;
  for (int i = 1; i <= k; ++i)
    comp0 = comp0 - Series::variable(k, f.precision(), i) * partial(f, i);

  std::vector<Series> comps;
  comps.reserve(2 * k + 1);
  comps.push_back(comp0);
  for (int i = 1; i <= k; ++i)
    comps.push_back(Series::variable(k, f.precision(), i) * fz - partial(f, k + i));
  for (int i = 1; i <= k; ++i) comps.push_back(partial(f, i));
  return VectorField(k, f.precision() - 1, std::move(comps));
}

ContactGerm darboux_germ(int k, int precision) {
  Form alpha(k, 1, precision);
  for (int i = 1; i <= k; ++i) alpha.add_term({k + i}, Series::variable(k, precision, i));
  Form beta(k, 1, precision);
  return ContactGerm(alpha, beta);
}

TangencyResult tangency_check(const ContactGerm& germ, const VectorField& x) {
  IcctResult chk = icct_check(germ, x);
  if (!chk.verdict)
    throw DomainError("tangency analysis needs an infinitesimal contact transformation");
  TangencyResult r;
  r.certified_precision = chk.certified_precision;
  if (!germ.singular_at_origin()) {
    r.tangent = true;
    r.martinet_empty = true;
    return r;
  }
  r.tangent = restrict_z0(x.component(0)).is_zero();
  return r;
}

OrderReport vanishing_order_corollary(const ContactGerm& germ, const Series& f) {
  auto of = z_order(f);
  if (of && *of == 0) throw DomainError("function must vanish along the singular locus");
  InvertResult inv = invert_theta(germ, f);

  OrderReport r;
  r.order = of;
  r.order_at_least_2 = !of || *of >= 2;
  r.components_vanish_on_s = true;
  for (int v = 0; v <= 2 * germ.k(); ++v) {
    auto o = z_order(inv.x.component(v));
    r.component_orders.push_back(o);
    if (o && *o < 1) r.components_vanish_on_s = false;
  }
  r.certified_precision = inv.certified_precision;
  return r;
}

RestrictedLieResult restricted_lie_corollary(const ContactGerm& germ, const VectorField& x) {
  TangencyResult tan = tangency_check(germ, x);
  RestrictedLieResult r;
  if (tan.martinet_empty) {
    r.vacuous = true;
    r.identity_holds = true;
    r.certified_precision = tan.certified_precision;
    return r;
  }
  if (!tan.tangent) throw DomainError("field is not tangent to the singular locus");

  VectorField xs(germ.k(), x.precision());
  for (int m = 1; m <= 2 * germ.k(); ++m) xs.set_component(m, restrict_z0(x.component(m)));
  Form alpha_s = restrict_form_S(germ.alpha());
  Form lie = interior(xs, ext_d_prime(alpha_s)) + ext_d_prime(interior(xs, alpha_s));

  Series hs = partial(theta(germ, x), 0);
  for (int m = 1; m <= 2 * germ.k(); ++m)
    hs = hs - x.component(m) * germ.beta_coeff(m);
  hs = restrict_z0(hs);

  r.identity_holds = agree(lie, hs * alpha_s);
  r.lie = std::move(lie);
  r.h_s = std::move(hs);
  r.certified_precision = r.lie->precision();
  return r;
}

bool injectivity_witness(const ContactGerm& germ, const VectorField& x) {
  InvertResult inv = invert_theta(germ, theta(germ, x));
  return agree(inv.x, x);
}

}  // namespace contactkit
