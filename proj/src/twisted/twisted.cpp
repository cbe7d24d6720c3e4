#include "talex/twisted.hpp"

#include <numeric>

namespace talex {

namespace {

// Conjugate assignments tried when x -> X, y -> Y fails to kill the relator.
constexpr long kMaxConjugates = 64;

template <class R>
MatrixRep<R> two_bridge_rep(const Presentation& pres, const GenPair<R>& g, const std::string& name, long p) {
  return assign_with_fallback(pres, g, "XY", name, p + 1 > kMaxConjugates ? p + 1 : kMaxConjugates);
}

IntPoly total_from_q(const QPoly& twisted, const Matrix<Int>& c) {
  return canonical(bareiss_det(gamma_substitute(twisted, c)));
}

}  // namespace

void require_divides(long p, const TwoBridgeFraction& f) {
  require_odd_prime(p);
  if (f.alpha % p != 0)
    throw PreconditionError("p = " + std::to_string(p) + " does not divide alpha = " + std::to_string(f.alpha));
}

bool exponents_multiple_of(const IntPoly& p, long m) {
  for (long d = p.min_degree(); d <= p.max_degree(); ++d)
    if (sgn(p.coeff(d)) != 0 && d % m != 0) return false;
  return true;
}

MatrixRep<QuotientElem> xi_rep(const Presentation& pres, long p) {
  return two_bridge_rep(pres, dihedral_xi(p), "xi(p=" + std::to_string(p) + ")", p);
}

IntPoly dihedral_total(const TwoBridgeFraction& f, long p) {
  require_divides(p, f);
  const Presentation pres = presentation(f);
  const QPoly tw = wada(pres, xi_rep(pres, p));
  return total_from_q(tw, companion_matrix(theta((p - 1) / 2)));
}

IntPoly dihedral_total_pi0(const TwoBridgeFraction& f, long p) {
  require_divides(p, f);
  const Presentation pres = presentation(f);
  return wada(pres, two_bridge_rep(pres, dihedral_pi0(p), "pi0", p));
}

IntPoly perm_dihedral_total(const TwoBridgeFraction& f, long p) {
  require_divides(p, f);
  const Presentation pres = presentation(f);
  return wada(pres, two_bridge_rep(pres, dihedral_pi(p), "pi", p));
}

IntPoly perm_dihedral_total(const Presentation& pres, long p, const std::string& pattern) {
  return wada(pres, build_rep(pres, dihedral_pi(p), pattern, "pi"));
}

BinaryDihedralResult binary_dihedral_total(const TwoBridgeFraction& f, long p) {
  require_divides(p, f);
  const Presentation pres = presentation(f);
  const QPoly tw = wada(pres, two_bridge_rep(pres, binary_dihedral(p), "binary-dihedral", p));
  BinaryDihedralResult r;
  r.total = total_from_q(tw, companion_matrix(cyclotomic_poly(p)));
  r.over_i = canonical(cyclic_product(dihedral_total(f, p), int_poly({1, 0, 1})));
  r.cross_check = r.total == r.over_i;
  return r;
}

IntPoly binary_dihedral_total(const Presentation& pres, long p, const std::string& pattern) {
  return wada(pres, build_rep(pres, binary_dihedral_integer(p), pattern, "binary-dihedral"));
}

IntPoly metacyclic_total(const TwoBridgeFraction& f, long q, long p) {
  require_divides(p, f);
  if (q < 1 || std::gcd(q, p) != 1) throw PreconditionError("metacyclic: need q >= 1 with gcd(q, p) = 1");
  return canonical(cyclic_product(dihedral_total(f, p), cyclotomic_poly(2 * q)));
}

NqpResult nqp_total(const TwoBridgeFraction& f, long q, long p, bool require_match) {
  require_divides(p, f);
  const Presentation pres = presentation(f);
  NqpResult r;
  r.direct = wada(pres, two_bridge_rep(pres, nqp_images(q, p), "nqp", p));
  // The factor built from Delta alone is not divisible by 1 - t^{2q}; only
  // the full product is, so the division is applied to the product.
  const IntPoly m = x_pow_minus_one(2 * q);
  const IntPoly num = cyclic_product(alexander(pres), m) * cyclic_product(dihedral_total(f, p), m);
  r.product_formula = canonical(exact_div(num, IntPoly::monomial(Int(-1), 2 * q) + IntPoly(1)));
  r.match = r.direct == r.product_formula;
  r.exponents_divisible = exponents_multiple_of(r.direct, 2 * q);
  if (require_match && !r.match)
    throw CrossCheckMismatch("nqp_total: direct Wada value differs from the cyclic product formula for " +
                             f.to_string());
  return r;
}

IntPoly nqp_total(const Presentation& pres, long q, long p, const std::string& pattern) {
  return wada(pres, build_rep(pres, nqp_images(q, p), pattern, "nqp"));
}

KmetaReport kmeta_total(const Presentation& pres, long p, long k, const std::string& pattern) {
  const MatrixRep<Int> rep = kmeta_rep(pres, p, k, pattern);
  KmetaReport r;
  r.order = multiplicative_order(k, p);
  r.twisted = wada(pres, rep);
  r.alexander = alexander(pres);
  r.sigma_x = cycle_string(rep.image(pres.generators[0]));
  r.sigma_y = cycle_string(rep.image(pres.generators[1]));
  try {
    r.quotient = canonical(exact_div(r.twisted * int_poly({1, -1}), r.alexander));
    r.periodic_quotient = exponents_multiple_of(*r.quotient, r.order);
  } catch (const NonExactDivision&) {
    r.quotient.reset();
    r.periodic_quotient = false;
  }
  return r;
}

}  // namespace talex
