#pragma once
#include <json.hpp>

#include "torus/snf.hpp"
#include "torus/whitehead.hpp"

namespace torus {

using json = nlohmann::json;

inline constexpr const char *kSchema = "torus-forms/1";

json integer_to_json(const Integer &x); // number when it fits in int64, else decimal string
Integer integer_from_json(const json &j);
json poly_to_json(const LaurentPoly &p);
// A string such as "1 - t^-2" or an integer.
LaurentPoly poly_from_json(const json &j);
json matrix_to_json(const PolyMatrix &m);
json matrix_to_json(const IntMatrix &m);
// Nested array of rows, or an object with a "matrix" field.
PolyMatrix poly_matrix_from_json(const json &j);
json group_to_json(const AbelianGroup &g);
json whitehead_to_json(const WhiteheadElement &w);

} // namespace torus
