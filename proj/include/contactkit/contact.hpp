#pragma once

#include <optional>
#include <vector>

#include "contactkit/germ.hpp"

namespace contactkit {

enum class OriginClass { contact_point, smooth_singular, not_smooth };

// Coefficient H of eta ^ (d eta)^k = H vol for a general 1-form eta.
Series contact_defect(const Form& eta);

// Classifies the zero locus of H at the origin: H(0) != 0 -> contact_point;
// otherwise dH(0) != 0 -> smooth_singular, else not_smooth.
OriginClass structurally_smooth_origin(const Series& h);

struct RealizabilityResult {
  bool cond1 = false;  // (d alpha)^k = k (d alpha)^{k-1} ^ alpha ^ beta on S
  bool cond2 = false;  // (d alpha)^{k-1}^d beta - (k-1)(d alpha)^{k-2}^alpha^beta^d beta != 0 at 0
  int certified_precision = 0;
};

// Evaluates both realizability conditions with beta restricted to S.
RealizabilityResult realizability_check(const ContactGerm& germ);

// theta(X) = omega(X).
Series theta(const ContactGerm& germ, const VectorField& x);

// X = f Z + sum s_m (d/dx^m - eta_m Z) with f = omega(X), s_m the coordinate
// dx^m components.
struct Decomposition {
  Series f;
  std::vector<Series> s;  // size 2k, s[m-1] for m = 1..2k

  Decomposition(Series f_, std::vector<Series> s_) : f(std::move(f_)), s(std::move(s_)) {}
};

Decomposition decompose(const ContactGerm& germ, const VectorField& x);
VectorField reassemble(const ContactGerm& germ, const Decomposition& d);

struct IcctWitness {
  IndexTuple component;  // basis tuple where the identity fails
  Exponent monomial;     // graded-lex-least nonzero monomial there
  Rational value;
};

struct IcctResult {
  bool verdict = false;
  std::optional<Series> h;         // multiplier when verdict holds
  std::optional<IcctWitness> witness;
  int certified_precision = 0;
};

// Infinitesimal contact transformation test, two routes: the contraction
// identity i_Z i_X (omega ^ d omega) = i_Z (f d omega + omega ^ df), and the
// direct L_X omega = h omega with h = df/dz - sum s_m b_m - z sum s_m db_m/dz.
// Route disagreement raises InternalCheckError.
IcctResult icct_check(const ContactGerm& germ, const VectorField& x);

struct MembershipCertificate {
  bool verdict = false;
  bool nonsingular_at_origin = false;  // H(0) != 0: theta is onto, no witness
  std::optional<Form> gamma;           // singular yes: membership form = z gamma
  std::optional<int> failing_m;        // 1-based position of first bad component
  std::optional<IndexTuple> failing_component;
  std::optional<Exponent> witness_monomial;
  int certified_precision = 0;
};

// Contact-Hamiltonian membership: the membership form
// (d'f + f beta - f_z alpha) ^ (d alpha - alpha ^ beta)^{k-1} must vanish
// along S; evaluated together with the equivalent per-m z-divisibility
// conditions, whose verdicts must agree componentwise.
MembershipCertificate membership(const ContactGerm& germ, const Series& f);

struct MembershipError : std::runtime_error {
  MembershipCertificate certificate;
  MembershipError(const std::string& what, MembershipCertificate cert)
      : std::runtime_error(what), certificate(std::move(cert)) {}
};

struct InvertResult {
  VectorField x;
  Series h;  // multiplier of the verified icct
  int certified_precision = 0;

  InvertResult(VectorField x_, Series h_) : x(std::move(x_)), h(std::move(h_)) {}
};

// theta^-1: s_m = k [dx^m ^ (f d omega + omega ^ df) ^ mu^{k-1}] / [dz ^ mu^k]
// as volume coefficients. Singular germs divide by z first (unit denominator
// cofactor), nonsingular germs invert the denominator directly; germs whose
// Pfaffian vanishes to z-order >= 2 are rejected. theta(X) = f and the icct
// property are re-verified before returning.
InvertResult invert_theta(const ContactGerm& germ, const Series& f);

// Classical Darboux-coordinate inverse for omega = dz + sum_{i<=k} x^i dx^{k+i}:
// X = (f - sum x^i f_{x^i}) d/dz
//   + sum_{i<=k} ((x^i f_z - f_{x^{k+i}}) d/dx^i + f_{x^i} d/dx^{k+i}).
VectorField classical_inverse(const Series& f, int k);

// The Darboux germ itself (alpha = sum x^i dx^{k+i}, beta = 0).
ContactGerm darboux_germ(int k, int precision);

struct TangencyResult {
  bool tangent = false;
  bool martinet_empty = false;  // H(0) != 0: vacuously tangent
  int certified_precision = 0;
};

// For an icct X (precondition checked): the d/dz coordinate component must
// vanish along S. Nonsingular germs report vacuous truth.
TangencyResult tangency_check(const ContactGerm& germ, const VectorField& x);

struct OrderReport {
  std::optional<int> order;           // z_order(f); nullopt = +infinity
  bool order_at_least_2 = false;
  std::vector<std::optional<int>> component_orders;  // of theta^-1(f)
  bool components_vanish_on_s = false;
  int certified_precision = 0;
};

// Vanishing-order pipeline: requires membership yes and z_order(f) >= 1;
// reports z_order(f) (claimed >= 2) and the z-orders of the components of
// theta^-1(f) (claimed >= 1). Claims are reported, not asserted.
OrderReport vanishing_order_corollary(const ContactGerm& germ, const Series& f);

struct RestrictedLieResult {
  bool vacuous = false;  // no Martinet locus at the origin
  std::optional<Form> lie;       // L_{X|S} alpha computed on S (2k variables)
  std::optional<Series> h_s;     // (df/dz - sum s_m b_m)|_S
  bool identity_holds = false;   // lie == h_s * alpha
  int certified_precision = 0;
};

// Restriction of the icct flow to S: L_{X|S}(alpha) = h_S alpha with
// h_S = (df/dz - sum s_m b_m)|_S. Requires icct and tangency.
RestrictedLieResult restricted_lie_corollary(const ContactGerm& germ, const VectorField& x);

// Round trip invert_theta(theta(X)) == X at the shared certified precision.
bool injectivity_witness(const ContactGerm& germ, const VectorField& x);

}  // namespace contactkit
