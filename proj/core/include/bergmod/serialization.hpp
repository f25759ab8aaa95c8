#pragma once

#include <nlohmann/json.hpp>

#include "bergmod/angle.hpp"
#include "bergmod/carleson.hpp"
#include "bergmod/common.hpp"
#include "bergmod/varieties.hpp"

namespace bergmod::io {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im] pairs; vectors are arrays of pairs.
Json to_json(cplx c);
Json to_json(const CVector& v);
cplx complex_from_json(const Json& j);
CVector vector_from_json(const Json& j);
// Array of vectors -> columns of an n x k matrix.
CMatrix columns_from_json(const Json& j, int n);
Json columns_to_json(const CMatrix& m);

// Variety schema:
//   {"kind": "linear", "ambient_dim": n, "basis": [v1, ...]}
//   {"kind": "affine", "ambient_dim": n, "base": p, "direction": [v1, ...]}
//   {"kind": "graph",  "ambient_dim": n, "dim": d,
//    "components": [[{"exponent": [a1..ad], "coeff": [re, im]}, ...], ...],
//    "chart": [u1, ..., un]}            (chart columns, optional)
// Linear and affine spanning vectors need not be orthonormal.
Variety variety_from_json(const Json& j);
Json variety_to_json(const Variety& v);

Json to_json(const AngleReport& r);
Json to_json(const CarlesonReport& r);
Json to_json(const LinearVariety& v);

}  // namespace bergmod::io
