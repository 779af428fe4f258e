#pragma once

#include <nlohmann/json.hpp>

#include "qdrazin/qmatrix.hpp"
#include "qdrazin/quaternion.hpp"
#include "qdrazin/rational.hpp"

namespace qdrazin {

using Json = nlohmann::ordered_json;

/// A JSON integer, or a string "p" / "p/q". Floats are rejected so that
/// every value read is exact.
Rational rational_from_json(const Json& j);
/// Integer when it fits in int64, otherwise the canonical "p/q" string.
Json rational_to_json(const Rational& r);

/// Quaternions are 4-arrays [a0, a1, a2, a3].
Quaternion quaternion_from_json(const Json& j);
Json quaternion_to_json(const Quaternion& q);

/// {"rows": m, "cols": n, "data": [[q, ...], ...]}
QMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const QMatrix& m);

/// Same layout with every entry rendered by Quaternion::to_string.
Json matrix_to_pretty_json(const QMatrix& m);

}  // namespace qdrazin
