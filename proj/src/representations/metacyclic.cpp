#include "talex/representations.hpp"

#include <numeric>

namespace talex {

Matrix<Int> permutation_matrix(const std::vector<long>& sigma) {
  const std::size_t n = sigma.size();
  Matrix<Int> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(sigma[i])) = 1;
  return m;
}

Matrix<Int> cyclic_shift(long m) {
  if (m < 1) throw PreconditionError("cyclic_shift: order must be positive");
  std::vector<long> s(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = (i + 1) % m;
  // Transposed column companion of t^m - 1.
  return permutation_matrix(s);
}

GenPair<Int> nqp_images(long q, long p) {
  require_odd_prime(p);
  if (q < 1 || std::gcd(q, p) != 1) throw PreconditionError("nqp: need q >= 1 with gcd(q, p) = 1");
  const GenPair<Int> pi = dihedral_pi(p);
  const Matrix<Int> c = cyclic_shift(2 * q);
  const Matrix<Int> c_inv = c.transpose();
  return {kronecker(pi.x, c), kronecker(pi.x, c_inv), kronecker(pi.y, c), kronecker(pi.y, c_inv)};
}

Matrix<Int> sigma_a(long p) {
  std::vector<long> s(static_cast<std::size_t>(p));
  for (long i = 0; i < p; ++i) s[static_cast<std::size_t>(i)] = (i + 1) % p;
  return permutation_matrix(s);
}

namespace {

long inverse_mod(long k, long p) {
  k = mod_floor(k, p);
  for (long j = 1; j < p; ++j)
    if ((k * j) % p == 1) return j;
  throw PreconditionError("k is not invertible modulo p");
}

}  // namespace

Matrix<Int> sigma_s(long p, long k) {
  const long kinv = inverse_mod(k, p);
  std::vector<long> s(static_cast<std::size_t>(p));
  for (long i = 0; i < p; ++i) s[static_cast<std::size_t>(i)] = (i * kinv) % p;
  return permutation_matrix(s);
}

long multiplicative_order(long k, long p) {
  k = mod_floor(k, p);
  if (k == 0) throw PreconditionError("k must be a unit modulo p");
  long v = k, m = 1;
  while (v != 1) {
    v = (v * k) % p;
    ++m;
  }
  return m;
}

std::string cycle_string(const Matrix<Int>& perm) {
  const std::size_t n = perm.rows();
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (perm(i, j) == 1) img[i] = j;
  // Points are written 1..n with n standing for 0, and cycles start at their
  // first point in the order 1, 2, ..., n-1, 0.
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t s = k % n;
    if (seen[s] || img[s] == s) continue;
    out += "(";
    for (std::size_t i = s; !seen[i]; i = img[i]) {
      seen[i] = true;
      out += std::to_string(i == 0 ? n : i);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

MatrixRep<Int> kmeta_rep(const Presentation& pres, long p, long k, const std::string& pattern) {
  require_odd_prime(p);
  if (mod_floor(k, p) == 0 || mod_floor(k, p) == 1) throw PreconditionError("kmeta: k must differ from 0 and 1 mod p");
  const Matrix<Int> s = sigma_s(p, k);
  const Matrix<Int> a = sigma_a(p);
  Matrix<Int> aj = a;
  for (long j = 1; j < p; ++j) {
    Matrix<Int> y = s * aj;
    GenPair<Int> g{s, s.transpose(), y, y.transpose()};
    try {
      return build_rep(pres, g, pattern, "kmeta(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")");
    } catch (const NoValidAssignment&) {
    }
    aj = aj * a;
  }
  throw NoValidAssignment("kmeta: no assignment y -> sigma(s) sigma(a)^j kills the relators");
}

}  // namespace talex
