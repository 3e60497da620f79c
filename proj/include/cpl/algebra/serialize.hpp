#pragma once

#include <json.hpp>

#include "cpl/algebra/bigint.hpp"
#include "cpl/algebra/int_matrix.hpp"
#include "cpl/algebra/laurent.hpp"

namespace cpl::algebra {

using Json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [{"exp": [...], "coef": "decimal"}]} in canonical order.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// Array of arrays of decimal strings.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

inline Json to_json(const BigRational& q) { return to_string(q); }
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);

/// Accepts JSON integers or decimal / "p/q" strings.
BigRational rational_from_json(const Json& j);
BigInt integer_from_json(const Json& j);

}  // namespace cpl::algebra
