#include "contactkit/io.hpp"

#include <fstream>

#include "contactkit/expr.hpp"

namespace contactkit {

namespace {

Json exponent_json(const Exponent& e) {
  Json a = Json::array();
  for (auto v : e) a.push_back(v);
  return a;
}

Exponent exponent_from(const Json& j) {
  Exponent e;
  for (const auto& v : j) {
    long long n = v.get<long long>();
    if (n < 0) throw DomainError("negative exponent in series document");
    e.push_back(static_cast<std::uint32_t>(n));
  }
  return e;
}

[[noreturn]] void malformed(const char* what, const std::exception& ex) {
  throw DomainError(std::string("malformed ") + what + " document: " + ex.what());
}

}  // namespace

Json series_to_json(const Series& s) {
  Json doc;
  doc["k"] = s.k();
  doc["precision"] = s.precision();
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back(Json::array({exponent_json(e), numerator(c).str(), denominator(c).str()}));
  doc["terms"] = std::move(terms);
  return doc;
}

Series series_from_json(const Json& j) {
  try {
    Series s(j.at("k").get<int>(), j.at("precision").get<int>());
    for (const auto& t : j.at("terms"))
      s.add_term(exponent_from(t.at(0)), rational_from_parts(t.at(1).get<std::string>(),
                                                             t.at(2).get<std::string>()));
    return s;
  } catch (const Json::exception& ex) {
    malformed("series", ex);
  }
}

Json form_to_json(const Form& f) {
  Json doc;
  doc["k"] = f.k();
  doc["degree"] = f.degree();
  doc["precision"] = f.precision();
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms()) {
    Json tuple = Json::array();
    for (int v : idx) tuple.push_back(v);
    terms.push_back(Json::array({std::move(tuple), series_to_json(c)}));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

Form form_from_json(const Json& j) {
  try {
    Form f(j.at("k").get<int>(), j.at("degree").get<int>(), j.at("precision").get<int>());
    for (const auto& t : j.at("terms")) {
      IndexTuple idx;
      for (const auto& v : t.at(0)) idx.push_back(v.get<int>());
      f.add_term(idx, series_from_json(t.at(1)));
    }
    return f;
  } catch (const Json::exception& ex) {
    malformed("form", ex);
  }
}

Json vector_field_to_json(const VectorField& x) {
  Json doc;
  doc["k"] = x.k();
  doc["precision"] = x.precision();
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(series_to_json(c));
  doc["components"] = std::move(comps);
  return doc;
}

VectorField vector_field_from_json(const Json& j) {
  try {
    VectorField x(j.at("k").get<int>(), j.at("precision").get<int>());
    const auto& comps = j.at("components");
    if (static_cast<int>(comps.size()) != 2 * x.k() + 1)
      throw DomainError("vector field document needs 2k+1 components");
    for (int v = 0; v <= 2 * x.k(); ++v) x.set_component(v, series_from_json(comps.at(v)));
    return x;
  } catch (const Json::exception& ex) {
    malformed("vector field", ex);
  }
}

ProblemFile problem_from_json(const Json& j) {
  try {
    int k = j.at("k").get<int>();
    int precision = j.at("precision").get<int>();
    if (k < 1) throw DomainError("problem needs k >= 1");

    auto one_form = [&](const char* key) {
      const auto& coeffs = j.at(key);
      if (static_cast<int>(coeffs.size()) != 2 * k)
        throw DomainError(std::string(key) + " needs 2k coefficient expressions");
      Form f(k, 1, precision);
      for (int m = 1; m <= 2 * k; ++m)
        f.add_term({m}, parse_series(coeffs.at(m - 1).get<std::string>(), k, precision));
      return f;
    };

    ProblemFile p(one_form("alpha"), one_form("beta"));
    p.k = k;
    p.precision = precision;
    if (j.contains("f")) p.f = parse_series(j.at("f").get<std::string>(), k, precision);
    if (j.contains("X")) {
      const auto& comps = j.at("X");
      if (static_cast<int>(comps.size()) != 2 * k + 1)
        throw DomainError("X needs 2k+1 component expressions");
      VectorField x(k, precision);
      for (int v = 0; v <= 2 * k; ++v)
        x.set_component(v, parse_series(comps.at(v).get<std::string>(), k, precision));
      p.x = std::move(x);
    }
    return p;
  } catch (const Json::exception& ex) {
    malformed("problem", ex);
  }
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open problem file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& ex) {
    malformed("problem", ex);
  }
  return problem_from_json(j);
}

}  // namespace contactkit
