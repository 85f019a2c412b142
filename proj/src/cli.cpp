#include "contactkit/cli.hpp"

#include <ostream>

#include "contactkit/contact.hpp"
#include "contactkit/expr.hpp"
#include "contactkit/io.hpp"
#include "contactkit/selftest.hpp"

namespace contactkit {

namespace {

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json int_tuple_json(const IndexTuple& t) {
  Json a = Json::array();
  for (int v : t) a.push_back(v);
  return a;
}

Json exponent_tuple_json(const Exponent& e) {
  Json a = Json::array();
  for (auto v : e) a.push_back(v);
  return a;
}

Json optional_order_json(const std::optional<int>& o) {
  return o ? Json(*o) : Json(nullptr);
}

const char* origin_class_name(OriginClass c) {
  switch (c) {
    case OriginClass::contact_point: return "contact_point";
    case OriginClass::smooth_singular: return "smooth_singular";
    default: return "not_smooth";
  }
}

Json certificate_json(const MembershipCertificate& cert) {
  Json doc;
  doc["verdict"] = cert.verdict;
  doc["nonsingular_at_origin"] = cert.nonsingular_at_origin;
  doc["certified_precision"] = cert.certified_precision;
  if (cert.gamma) doc["gamma"] = form_to_json(*cert.gamma);
  if (cert.failing_m) doc["failing_m"] = *cert.failing_m;
  if (cert.failing_component) doc["failing_component"] = int_tuple_json(*cert.failing_component);
  if (cert.witness_monomial) doc["witness_monomial"] = exponent_tuple_json(*cert.witness_monomial);
  return doc;
}

Series require_f(const ProblemFile& p) {
  if (!p.f) throw DomainError("problem file supplies no f");
  return *p.f;
}

VectorField require_x(const ProblemFile& p) {
  if (!p.x) throw DomainError("problem file supplies no X");
  return *p.x;
}

int cmd_defect(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  Json doc;
  doc["command"] = "defect";
  doc["defect"] = series_to_json(germ.defect());
  doc["origin_class"] = origin_class_name(structurally_smooth_origin(germ.defect()));
  doc["singular_at_origin"] = germ.singular_at_origin();
  doc["certified_precision"] = germ.defect().precision();
  emit(out, doc);
  return 0;
}

int cmd_realizable(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  RealizabilityResult r = realizability_check(germ);
  Json doc;
  doc["command"] = "realizable";
  doc["cond1"] = r.cond1;
  doc["cond2"] = r.cond2;
  doc["realizable"] = r.cond1 && r.cond2;
  doc["certified_precision"] = r.certified_precision;
  emit(out, doc);
  return r.cond1 && r.cond2 ? 0 : 1;
}

int cmd_member(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  MembershipCertificate cert = membership(germ, require_f(p));
  Json doc = certificate_json(cert);
  doc["command"] = "member";
  emit(out, doc);
  return cert.verdict ? 0 : 1;
}

int cmd_invert(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  Series f = require_f(p);
  Json doc;
  doc["command"] = "invert";
  try {
    InvertResult inv = invert_theta(germ, f);
    TangencyResult tan = tangency_check(germ, inv.x);
    doc["verdict"] = true;
    doc["X"] = vector_field_to_json(inv.x);
    doc["h"] = series_to_json(inv.h);
    doc["tangent"] = tan.tangent;
    doc["martinet_empty"] = tan.martinet_empty;
    doc["round_trip"] = agree(theta(germ, inv.x), f);
    doc["certified_precision"] = inv.certified_precision;
    emit(out, doc);
    return 0;
  } catch (const MembershipError& e) {
    doc["verdict"] = false;
    doc["reason"] = e.what();
    doc["certificate"] = certificate_json(e.certificate);
    emit(out, doc);
    return 1;
  }
}

int cmd_theta(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  Series f = theta(germ, require_x(p));
  Json doc;
  doc["command"] = "theta";
  doc["f"] = series_to_json(f);
  doc["certified_precision"] = f.precision();
  emit(out, doc);
  return 0;
}

int cmd_icct(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  IcctResult r = icct_check(germ, require_x(p));
  Json doc;
  doc["command"] = "icct";
  doc["verdict"] = r.verdict;
  doc["certified_precision"] = r.certified_precision;
  if (r.h) doc["h"] = series_to_json(*r.h);
  if (r.witness) {
    Json w;
    w["component"] = int_tuple_json(r.witness->component);
    w["monomial"] = exponent_tuple_json(r.witness->monomial);
    w["value"] = to_string(r.witness->value);
    doc["witness"] = std::move(w);
  }
  emit(out, doc);
  return r.verdict ? 0 : 1;
}

int cmd_order(const ProblemFile& p, std::ostream& out) {
  ContactGerm germ(p.alpha, p.beta);
  Json doc;
  doc["command"] = "order";
  try {
    OrderReport r = vanishing_order_corollary(germ, require_f(p));
    doc["order"] = optional_order_json(r.order);
    doc["order_at_least_2"] = r.order_at_least_2;
    Json comps = Json::array();
    for (const auto& o : r.component_orders) comps.push_back(optional_order_json(o));
    doc["component_orders"] = std::move(comps);
    doc["components_vanish_on_s"] = r.components_vanish_on_s;
    doc["certified_precision"] = r.certified_precision;
    emit(out, doc);
    return r.order_at_least_2 && r.components_vanish_on_s ? 0 : 1;
  } catch (const MembershipError& e) {
    doc["verdict"] = false;
    doc["reason"] = e.what();
    doc["certificate"] = certificate_json(e.certificate);
    emit(out, doc);
    return 1;
  }
}

void usage(std::ostream& out) {
  out << "usage: contactkit <command> [FILE]\n"
         "commands:\n"
         "  defect FILE      contact defect H and origin classification\n"
         "  realizable FILE  realizability conditions for (alpha, beta)\n"
         "  member FILE      contact-Hamiltonian membership certificate for f\n"
         "  invert FILE      inverse image X of f with multiplier and tangency\n"
         "  theta FILE       omega(X) for the supplied X\n"
         "  icct FILE        infinitesimal contact transformation test for X\n"
         "  order FILE       vanishing-order report for f\n"
         "  selftest         run the verification suite\n"
         "exit codes: 0 affirmative, 1 negative verdict, 2 input error,\n"
         "            3 precision exhausted\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  try {
    if (args.empty()) {
      usage(out);
      return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "selftest") return run_acceptance(out) == 0 ? 0 : 1;
    if (args.size() != 2) {
      usage(out);
      return 2;
    }
    ProblemFile p = load_problem(args[1]);
    if (cmd == "defect") return cmd_defect(p, out);
    if (cmd == "realizable") return cmd_realizable(p, out);
    if (cmd == "member") return cmd_member(p, out);
    if (cmd == "invert") return cmd_invert(p, out);
    if (cmd == "theta") return cmd_theta(p, out);
    if (cmd == "icct") return cmd_icct(p, out);
    if (cmd == "order") return cmd_order(p, out);
    usage(out);
    return 2;
  } catch (const ParseError& e) {
    Json doc;
    doc["error"] = e.what();
    doc["column"] = e.column;
    emit(out, doc);
    return 2;
  } catch (const PrecisionError& e) {
    Json doc;
    doc["error"] = e.what();
    emit(out, doc);
    return 3;
  } catch (const DivisibilityError& e) {
    Json doc;
    doc["error"] = e.what();
    emit(out, doc);
    return 2;
  } catch (const MismatchError& e) {
    Json doc;
    doc["error"] = e.what();
    emit(out, doc);
    return 2;
  } catch (const DomainError& e) {
    Json doc;
    doc["error"] = e.what();
    emit(out, doc);
    return 2;
  }
}

}  // namespace contactkit
