#pragma once

#include <string>

#include "json.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

/// {"min_deg": k, "coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

/// Row-major nested arrays of polynomial objects.
nlohmann::json matrix_to_json(const Matrix<IntPoly>& m);
nlohmann::json int_matrix_to_json(const Matrix<Int>& m);

}  // namespace talex
