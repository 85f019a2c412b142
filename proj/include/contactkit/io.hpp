#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "contactkit/exterior.hpp"

namespace contactkit {

using Json = nlohmann::json;

// Series document:
//   {"k": int, "precision": int,
//    "terms": [[[e0,...,e2k], "num", "den"], ...]}  (graded-lex order)
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

// Form document adds "degree" and keys terms by index tuple:
//   {"k":..., "degree":..., "precision":...,
//    "terms": [[[i1,...,ir], <series terms>], ...]}
Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

// Vector field document: {"k":..., "precision":..., "components": [...]}
// with component 0 the d/dz slot.
Json vector_field_to_json(const VectorField& x);
VectorField vector_field_from_json(const Json& j);

// Problem file: coefficient expressions for alpha, beta (dx^1..dx^2k slots)
// plus optional f and optional X (d/dz, d/dx^1, ..., d/dx^2k expressions).
struct ProblemFile {
  int k = 0;
  int precision = 0;
  Form alpha;
  Form beta;
  std::optional<Series> f;
  std::optional<VectorField> x;

  ProblemFile(Form a, Form b) : alpha(std::move(a)), beta(std::move(b)) {}
};

ProblemFile problem_from_json(const Json& j);
ProblemFile load_problem(const std::string& path);

}  // namespace contactkit
