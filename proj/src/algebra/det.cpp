#include "talex/det.hpp"

#include <algorithm>

namespace talex {

Int integer_det(Matrix<Int> m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(m(piv, k)) == 0) ++piv;
    if (piv == n) return Int(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      sign = -sign;
    }
    const Int& pk = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Int& lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * pk;
        v -= lead * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = pk;
  }
  Int d = m(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

namespace {

Int l1_norm(const IntPoly& p) {
  Int s = 0;
  for (const auto& c : p.coeffs()) s += abs(c);
  return s;
}

// Value at 2^bits of a polynomial with no negative powers.
Int pack(const IntPoly& p, unsigned long bits) {
  Int acc = 0;
  if (p.is_zero()) return acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), bits);
    acc += p.coeffs()[i];
  }
  mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), bits * static_cast<unsigned long>(p.min_degree()));
  return acc;
}

IntPoly unpack(Int v, unsigned long bits, long max_terms) {
  std::vector<Int> out;
  Int half, digit;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  Int base = half * 2;
  while (sgn(v) != 0) {
    if (static_cast<long>(out.size()) > max_terms)
      throw CertificateFailure("bareiss_det: Kronecker decoding overflowed its degree bound");
    mpz_fdiv_r_2exp(digit.get_mpz_t(), v.get_mpz_t(), bits);
    if (digit >= half) digit -= base;
    v -= digit;
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    out.push_back(digit);
  }
  return IntPoly(0, std::move(out));
}

}  // namespace

IntPoly bareiss_det(const Matrix<IntPoly>& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n <= 3) return cofactor_det(m);

  Matrix<IntPoly> shifted(n, n);
  long total_shift = 0;
  long degree_bound = 0;
  Int coeff_bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    long lo = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      const IntPoly& e = m(i, j);
      if (e.is_zero()) continue;
      lo = any ? std::min(lo, e.min_degree()) : e.min_degree();
      any = true;
    }
    if (!any) return IntPoly();
    total_shift += lo;
    long hi = 0;
    Int row_norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      shifted(i, j) = m(i, j).shift(-lo);
      if (!shifted(i, j).is_zero()) hi = std::max(hi, shifted(i, j).max_degree());
      row_norm += l1_norm(shifted(i, j));
    }
    degree_bound += hi;
    coeff_bound *= (row_norm > 1 ? row_norm : Int(1));
  }
  // |coefficient of det| <= prod of row l1 norms; two spare bits for the sign.
  const unsigned long bits = mpz_sizeinbase(coeff_bound.get_mpz_t(), 2) + 2;
  Matrix<Int> packed(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) packed(i, j) = pack(shifted(i, j), bits);
  Int value = integer_det(std::move(packed));
  return unpack(std::move(value), bits, degree_bound + 1).shift(total_shift);
}

QPoly small_det(const Matrix<QPoly>& m) {
  if (m.rows() > 3) throw PreconditionError("determinants over quotient-ring coefficients are limited to size <= 3");
  return cofactor_det(m);
}

}  // namespace talex
