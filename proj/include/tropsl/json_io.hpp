#pragma once

// JSON encodings. Rationals are always strings ("3", "-1/2"), never numbers;
// -inf is "-inf". Fans:
//
//   {"ambient_dim": n, "equalities": [[...]],
//    "maximal_cones": [{"label": ..., "inequalities": [[...]], "equalities": [[...]]}]}

#include "tropsl/polyhedral.hpp"
#include "tropsl/tropconv.hpp"
#include "tropsl/tropical.hpp"
#include "tropsl/valued_field.hpp"

#include <json.hpp>

namespace tropsl {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
// Accepts strings and JSON integers; ParseError otherwise.
Rational rational_from_json(const Json& j);

Json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

Json rows_to_json(const std::vector<RationalVector>& rows);
std::vector<RationalVector> rows_from_json(const Json& j);

Json cone_to_json(const Cone& c);
Cone cone_from_json(std::size_t ambient_dim, const Json& j);

Json fan_to_json(const Fan& f);
// Accepts a fan document or any object holding one under "fan".
Fan fan_from_json(const Json& j);

Json constraints_to_json(const std::vector<LinearConstraint>& cs);

// A square grid of element strings.
FieldMatrix field_matrix_from_json(const FieldConfig& cfg, const Json& j);
Json field_matrix_to_json(const FieldMatrix& g);

TropicalMatrix tropical_matrix_from_json(const Json& j);
Json tropical_matrix_to_json(const TropicalMatrix& m);

// One-based index lists, as the type vector appears on the command line.
Json type_to_json(const TypeVector& t);
TypeVector type_from_json(const Json& j);

}  // namespace tropsl
