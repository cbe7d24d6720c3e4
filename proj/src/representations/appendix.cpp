#include "talex/appendix.hpp"

#include "talex/errors.hpp"

namespace talex {

Int a_jk(long j, long k) {
  if (j < 1 || k < j) return Int(0);
  return binomial(j + k - 1, 2 * j - 1);
}

Int b_jk(long j, long k) {
  if (j < 1 || k < j) return Int(0);
  return binomial(j + k - 2, 2 * j - 2);
}

Matrix<Int> u_matrix(long n) {
  if (n < 1) throw PreconditionError("u_matrix: n must be positive");
  const auto un = static_cast<std::size_t>(n);
  Matrix<Int> u(2 * un, 2 * un);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      const auto r = static_cast<std::size_t>(i - 1), c = static_cast<std::size_t>(j - 1);
      u(r, c) = a_jk(i, n - j + 1);
      u(r, un + c) = -a_jk(i, j - 1);
      u(un + r, c) = b_jk(i, n - j + 1);
      u(un + r, un + c) = b_jk(i, j);
    }
  return u;
}

Int catalan_b(long k) {
  if (k < 0) return Int(0);
  Int v = binomial(2 * k + 2, k + 1) / (k + 2);
  return k % 2 == 0 ? v : Int(-v);
}

Int a_nk(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  const long i = n - k;
  return binomial(n + i, 2 * i) + 2 * binomial(n + i, 2 * i + 1);
}

Int d_kl(long n, long k, long l) {
  Int s = 0;
  for (long i = 0; i <= k; ++i) s += a_nk(n, i) * catalan_b(k + l - i);
  return s;
}

Matrix<Int> v_matrix(long n) {
  if (n < 1) throw PreconditionError("v_matrix: n must be positive");
  const auto un = static_cast<std::size_t>(n);
  Matrix<Int> v(un, un);
  for (long j = 1; j <= n; ++j)
    for (long k = 1; k <= n; ++k) v(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = d_kl(n, n - j, k - 1);
  return v;
}

Int f_value(long n, long m) {
  Int s = 0;
  for (long j = 0; j <= n; ++j) s += a_nk(n, n - j) * catalan_b(m + j);
  return s;
}

Int h_value(long n, long k) {
  Int s = 0;
  for (long j = 0; j <= k; ++j) s += a_nk(n, j) * f_value(n - 1, n + k - 2 - j);
  for (long j = 0; j <= k - 2; ++j) s -= a_nk(n - 1, j) * f_value(n, n + k - 3 - j);
  return s;
}

Int alternating_binomial_sum(long big_n, long big_k, long big_m) {
  Int s = 0;
  for (long i = 0; i <= big_m; ++i) {
    Int term = binomial(big_n - i, big_k - i) * binomial(big_m, big_m - i);
    if (i % 2 == 0) s += term;
    else s -= term;
  }
  return s;
}

}  // namespace talex
