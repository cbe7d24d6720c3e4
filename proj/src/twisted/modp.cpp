#include "talex/modp.hpp"

#include "talex/polytools.hpp"
#include "talex/representations.hpp"
#include "talex/twisted.hpp"

namespace talex {

namespace {

// Strips factors of t and scales to monic: the normal form modulo units c t^k.
FpPoly unit_normal(const FpPoly& f) {
  if (f.is_zero()) return f;
  std::size_t lo = 0;
  while (f.coeffs()[lo] == 0) ++lo;
  std::vector<long> c(f.coeffs().begin() + static_cast<long>(lo), f.coeffs().end());
  return FpPoly(f.prime(), std::move(c)).monic();
}

FpPoly exact_fp_div(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  a.divmod(b, q, r);
  if (!r.is_zero()) throw NonExactDivision("mod-p division is not exact", to_string(r.to_int_symmetric()));
  return q;
}

FpPoly fp_pow(FpPoly b, unsigned long e) {
  FpPoly r = FpPoly::constant(b.prime(), 1);
  while (e > 0) {
    if (e & 1UL) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

bool delta_vanishes_at_minus_one(const IntPoly& delta, long p) {
  return mpz_divisible_ui_p(eval_lowered(delta, Int(-1)).get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace

FpPoly reduce_mod(const IntPoly& f, long p) { return FpPoly::from_int(f.lowered(), p); }

bool equal_mod_p_up_to_units(const IntPoly& a, const IntPoly& b, long p) {
  return unit_normal(reduce_mod(a, p)) == unit_normal(reduce_mod(b, p));
}

FpPoly expected_f_mod_p(const IntPoly& alexander, long p) {
  const FpPoly one_plus_t(p, {1, 1});
  return fp_pow(exact_fp_div(reduce_mod(alexander, p), one_plus_t), static_cast<unsigned long>((p - 1) / 2));
}

ModpReport modp_congruence(const TwoBridgeFraction& f, long p) {
  ModpReport r;
  const IntPoly delta = alexander(presentation(f));
  r.applicable = delta_vanishes_at_minus_one(delta, p);
  if (!r.applicable) return r;
  const auto n = static_cast<unsigned long>((p - 1) / 2);
  const FpPoly plus = exact_fp_div(reduce_mod(delta, p), FpPoly(p, {1, 1}));
  const FpPoly minus = exact_fp_div(reduce_mod(delta.negate_t(), p), FpPoly(p, {1, p - 1}));
  const FpPoly expected = fp_pow(plus * minus, n);
  r.total_congruence = unit_normal(reduce_mod(dihedral_total(f, p), p)) == unit_normal(expected);
  return r;
}

bool modp_nqp_congruence(const TwoBridgeFraction& f, long q, long p) {
  const IntPoly delta = alexander(presentation(f));
  if (!delta_vanishes_at_minus_one(delta, p)) throw PreconditionError("Delta(-1) is not divisible by p");
  const FpPoly prod = reduce_mod(cyclic_product(delta, x_pow_minus_one(2 * q)), p);
  std::vector<long> den(static_cast<std::size_t>(2 * q + 1), 0);
  den.front() = 1;
  den.back() = p - 1;
  const auto e = static_cast<unsigned long>(p);
  const FpPoly expected = exact_fp_div(fp_pow(prod, e), fp_pow(FpPoly(p, den), e));
  const IntPoly direct = nqp_total(f, q, p, false).direct;
  return unit_normal(reduce_mod(direct, p)) == unit_normal(expected);
}

TriangularReport modp_triangular_structure(const TwoBridgeFraction& f, long p) {
  require_divides(p, f);
  const Presentation pres = presentation(f);
  const MatrixRep<QuotientElem> rep = xi_rep(pres, p);
  const long n = (p - 1) / 2;
  const Matrix<IntPoly> big =
      gamma_substitute(fox_matrix_image(pres.relators[0], pres.generators[0], rep), companion_matrix(theta(n)));
  const auto un = static_cast<std::size_t>(n);
  // Position of basis vector i in the interleaved order (f_1, e_1, f_2, e_2, ...).
  auto slot = [un](std::size_t i) { return i < un ? 2 * i + 1 : 2 * (i - un); };
  TriangularReport r;
  r.lower_triangular = true;
  for (std::size_t i = 0; i < 2 * un; ++i)
    for (std::size_t j = 0; j < 2 * un; ++j)
      if (slot(j) > slot(i) && !reduce_mod(big(i, j), p).is_zero()) r.lower_triangular = false;
  const IntPoly delta = alexander(pres);
  r.diagonals_match = true;
  for (std::size_t i = 0; i < 2 * un; ++i) {
    const IntPoly& want = i < un ? delta.negate_t() : delta;
    if (!equal_mod_p_up_to_units(big(i, i), want, p)) r.diagonals_match = false;
  }
  return r;
}

}  // namespace talex
