#pragma once

#include "talex/laurent.hpp"
#include "talex/matrix.hpp"
#include "talex/quotient.hpp"

namespace talex {

// Laplace expansion along the first row. Exponential; meant for n <= 4.
template <class R>
R cofactor_det(const Matrix<R>& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1L);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  R acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == R()) continue;
    Matrix<R> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    R term = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Fraction-free Gaussian elimination with row pivoting.
Int integer_det(Matrix<Int> m);

/// Exact determinant over Z[t^{±1}]: Kronecker substitution t = 2^b with b
/// large enough to separate every coefficient of the result, integer
/// Bareiss, and balanced base-2^b decoding. Small sizes use cofactors.
IntPoly bareiss_det(const Matrix<IntPoly>& m);

/// Determinant over Z[z]/(m)[t^{±1}]; restricted to size <= 3.
QPoly small_det(const Matrix<QPoly>& m);

inline IntPoly det(const Matrix<IntPoly>& m) { return bareiss_det(m); }
inline QPoly det(const Matrix<QPoly>& m) { return small_det(m); }

/// Adjugate of a matrix of size <= 3, so that m * adj(m) = det(m) * I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (!m.square() || n > 3) throw PreconditionError("adjugate limited to square matrices of size <= 3");
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj(0, 0) = R(1L);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<R> minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      R v = cofactor_det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? v : -v;
    }
  return adj;
}

}  // namespace talex
