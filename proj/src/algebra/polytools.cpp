#include "talex/polytools.hpp"

namespace talex {

Matrix<Int> companion_matrix(const IntPoly& monic) {
  if (monic.is_zero() || monic.min_degree() != 0 || monic.max_degree() < 1)
    throw PreconditionError("companion_matrix: need a polynomial of degree >= 1 starting at degree 0");
  if (monic.leading() != 1) throw PreconditionError("companion_matrix: polynomial is not monic");
  const auto d = static_cast<std::size_t>(monic.max_degree());
  Matrix<Int> c(d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -monic.coeff(static_cast<long>(i));
  return c;
}

Matrix<IntPoly> gamma_substitute(const QPoly& p, const Matrix<Int>& c) {
  const std::size_t n = c.rows();
  Matrix<IntPoly> out(n, n);
  if (p.is_zero()) return out;
  std::vector<Matrix<Int>> images;
  images.reserve(p.size());
  for (const auto& coeff : p.coeffs()) images.push_back(coeff.substitute(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> col(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) col[k] = images[k](i, j);
      out(i, j) = IntPoly(p.min_degree(), std::move(col));
    }
  return out;
}

Matrix<IntPoly> gamma_substitute(const Matrix<QPoly>& m, const Matrix<Int>& c) {
  const std::size_t n = c.rows();
  Matrix<IntPoly> out(m.rows() * n, m.cols() * n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_block(i * n, j * n, gamma_substitute(m(i, j), c));
  return out;
}

Matrix<IntPoly> constant_poly_matrix(const Matrix<Int>& m) {
  return m.map([](const Int& x) { return IntPoly(x); });
}

Matrix<Int> evaluate_at(const IntPoly& p, const Matrix<Int>& c) {
  if (p.min_degree() < 0) throw PreconditionError("evaluate_at: negative powers");
  const std::size_t n = c.rows();
  Matrix<Int> acc(n, n);
  for (long d = p.max_degree(); d >= 0; --d) {
    acc = acc * c;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += p.coeff(d);
  }
  return acc;
}

IntPoly cyclic_product(const IntPoly& p, const IntPoly& m) {
  const Matrix<Int> c = companion_matrix(m);
  const std::size_t d = c.rows();
  // P(tC) = sum_k p_k C^k t^k, entrywise collected by degree.
  Matrix<IntPoly> ptc(d, d);
  Matrix<Int> power = matrix_power(c, static_cast<unsigned long>(std::max(0L, p.min_degree())));
  if (p.min_degree() < 0) throw PreconditionError("cyclic_product: polynomial must not have negative powers");
  for (long k = p.min_degree(); k <= p.max_degree(); ++k) {
    const Int& pk = p.coeff(k);
    if (sgn(pk) != 0) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (sgn(power(i, j)) != 0) ptc(i, j) += IntPoly::monomial(pk * power(i, j), k);
    }
    power = power * c;
  }
  return bareiss_det(ptc);
}

IntPoly x_pow_minus_one(long k) {
  std::vector<Int> c(static_cast<std::size_t>(k + 1));
  c[0] = -1;
  c[static_cast<std::size_t>(k)] = 1;
  return IntPoly(0, std::move(c));
}

IntPoly cyclotomic_poly(long m) {
  if (m < 1) throw PreconditionError("cyclotomic_poly: m must be positive");
  IntPoly r = x_pow_minus_one(m);
  for (long d = 1; d < m; ++d)
    if (m % d == 0) r = exact_div(r, cyclotomic_poly(d));
  return r;
}

}  // namespace talex
