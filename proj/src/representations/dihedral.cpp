#include "talex/representations.hpp"

#include "talex/polytools.hpp"

namespace talex {

void require_odd_prime(long p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
}

IntPoly theta(long n) {
  if (n < 0) throw PreconditionError("theta: n must be nonnegative");
  std::vector<Int> c;
  for (long k = 0; k <= n; ++k) c.push_back(binomial(n + k, 2 * k) + 2 * binomial(n + k, 2 * k + 1));
  return IntPoly(0, std::move(c));
}

ModulusPtr theta_modulus(long n) { return make_modulus(theta(n), "w"); }

std::string default_pattern(const Presentation& pres) {
  std::string s(pres.generators.size(), 'Y');
  if (!s.empty()) s[0] = 'X';
  return s;
}

GenPair<Int> dihedral_pi(long p) {
  require_odd_prime(p);
  std::vector<long> sx(static_cast<std::size_t>(p)), sy(static_cast<std::size_t>(p));
  for (long i = 0; i < p; ++i) {
    sx[static_cast<std::size_t>(i)] = mod_floor(-i, p);
    sy[static_cast<std::size_t>(i)] = mod_floor(1 - i, p);
  }
  Matrix<Int> x = permutation_matrix(sx), y = permutation_matrix(sy);
  return {x, x, y, y};
}

GenPair<Int> dihedral_pi0(long p) {
  require_odd_prime(p);
  const auto m = static_cast<std::size_t>(p - 1);
  Matrix<Int> x(m, m), y(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    x(i, m - 1 - i) = 1;
    y(i, 0) = -1;
    if (i >= 1) y(i, m - i) += 1;
  }
  return {x, x, y, y};
}

GenPair<QuotientElem> dihedral_xi(long p) {
  require_odd_prime(p);
  ModulusPtr mod = theta_modulus((p - 1) / 2);
  const QuotientElem one = QuotientElem::constant(mod, Int(1));
  const QuotientElem zero = QuotientElem::constant(mod, Int(0));
  const QuotientElem w = QuotientElem::generator(mod);
  Matrix<QuotientElem> x{{-one, one}, {zero, one}};
  Matrix<QuotientElem> y{{-one, zero}, {w, one}};
  return {x, x, y, y};
}

GenPair<Int> dihedral_eta(long p) {
  require_odd_prime(p);
  const long n = (p - 1) / 2;
  const auto un = static_cast<std::size_t>(n);
  const Matrix<Int> e = Matrix<Int>::identity(un);
  const Matrix<Int> c = companion_matrix(theta(n));
  Matrix<Int> x(2 * un, 2 * un), y(2 * un, 2 * un);
  x.set_block(0, 0, -e);
  x.set_block(0, un, e);
  x.set_block(un, un, e);
  y.set_block(0, 0, -e);
  y.set_block(un, 0, c);
  y.set_block(un, un, e);
  return {x, x, y, y};
}

GenPair<QuotientElem> binary_dihedral(long p) {
  require_odd_prime(p);
  ModulusPtr mod = make_modulus(cyclotomic_poly(p), "v");
  const QuotientElem one = QuotientElem::constant(mod, Int(1));
  const QuotientElem zero = QuotientElem::constant(mod, Int(0));
  const QuotientElem v = QuotientElem::generator(mod);
  QuotientElem v_inv = one;
  for (long i = 0; i < p - 1; ++i) v_inv = v_inv * v;
  Matrix<QuotientElem> x{{zero, one}, {-one, zero}};
  Matrix<QuotientElem> y{{zero, v}, {-v_inv, zero}};
  return {x, -x, y, -y};
}

GenPair<Int> binary_dihedral_integer(long p) {
  require_odd_prime(p);
  const Matrix<Int> c = companion_matrix(cyclotomic_poly(p));
  const std::size_t d = c.rows();
  const Matrix<Int> e = Matrix<Int>::identity(d);
  const Matrix<Int> c_inv = matrix_power(c, static_cast<unsigned long>(p - 1));
  Matrix<Int> x(2 * d, 2 * d), y(2 * d, 2 * d);
  x.set_block(0, d, e);
  x.set_block(d, 0, -e);
  y.set_block(0, d, c);
  y.set_block(d, 0, -c_inv);
  return {x, -x, y, -y};
}

XYPowerTable xy_power_table(long p) {
  GenPair<QuotientElem> g = dihedral_xi(p);
  XYPowerTable t;
  t.n = (p - 1) / 2;
  const Matrix<QuotientElem> xy = g.x * g.y;
  Matrix<QuotientElem> cur = Matrix<QuotientElem>::identity(2);
  for (long k = 0; k <= p; ++k) {
    t.powers.push_back(cur);
    cur = cur * xy;
  }
  return t;
}

}  // namespace talex
