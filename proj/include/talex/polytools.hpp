#pragma once

#include "talex/det.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"
#include "talex/quotient.hpp"

namespace talex {

/// Column companion of a monic polynomial: ones on the subdiagonal, last
/// column holding -c_0 .. -c_{d-1}, so that p(C) = 0.
Matrix<Int> companion_matrix(const IntPoly& monic);

/// Replaces each Z[z]/(m) coefficient r(z) by the integer matrix r(C).
Matrix<IntPoly> gamma_substitute(const QPoly& p, const Matrix<Int>& c);

/// Blockwise version: every entry is expanded into a C-sized block.
Matrix<IntPoly> gamma_substitute(const Matrix<QPoly>& m, const Matrix<Int>& c);

/// Embeds an integer matrix as constant polynomials.
Matrix<IntPoly> constant_poly_matrix(const Matrix<Int>& m);

/// Product of P(zeta t) over the roots zeta of the monic polynomial m,
/// computed exactly as det P(t C_m).
IntPoly cyclic_product(const IntPoly& p, const IntPoly& m);

/// The m-th cyclotomic polynomial.
IntPoly cyclotomic_poly(long m);

/// t^k - 1 as a polynomial in the given variable (used as a modulus).
IntPoly x_pow_minus_one(long k);

/// Evaluates an integer polynomial at a square matrix (Horner).
Matrix<Int> evaluate_at(const IntPoly& p, const Matrix<Int>& c);

}  // namespace talex
