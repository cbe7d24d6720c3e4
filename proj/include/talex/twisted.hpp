#pragma once

#include <optional>
#include <type_traits>
#include <string>

#include "talex/det.hpp"
#include "talex/knots.hpp"
#include "talex/matrix_rep.hpp"
#include "talex/polytools.hpp"
#include "talex/representations.hpp"

namespace talex {

/// Which generator column was dropped and the denominator used.
template <class R>
struct WadaDetail {
  char omitted = 0;
  LaurentPoly<R> numerator;
  LaurentPoly<R> denominator;
};

/// Block matrix [rep(dR_i/dg_m)] over all relators i and generators m != omit.
template <class R>
Matrix<LaurentPoly<R>> fox_block_matrix(const Presentation& pres, const MatrixRep<R>& rep, char omit) {
  const std::size_t d = rep.dim();
  const std::size_t k = pres.generators.size();
  Matrix<LaurentPoly<R>> big(pres.relators.size() * d, (k - 1) * d);
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    std::size_t col = 0;
    for (char g : pres.generators) {
      if (g == omit) continue;
      big.set_block(i * d, col * d, fox_matrix_image(pres.relators[i], g, rep));
      ++col;
    }
  }
  return big;
}

/// Numerator and denominator of the Wada invariant before division. `omit`
/// forces the dropped generator; otherwise the first generator with a
/// nonsingular denominator is used.
template <class R>
WadaDetail<R> wada_fraction(const Presentation& pres, const MatrixRep<R>& rep, char omit = 0) {
  if (pres.generators.size() < 2 || pres.relators.size() + 1 != pres.generators.size())
    throw PreconditionError("wada: need a deficiency-one presentation");
  for (char g : pres.generators) {
    if (omit != 0 && g != omit) continue;
    LaurentPoly<R> den = det(generator_minus_identity(g, rep));
    if (den.is_zero()) continue;
    return WadaDetail<R>{g, det(fox_block_matrix(pres, rep, g)), den};
  }
  throw AllDenominatorsSingular("wada: every candidate denominator det(rep(g)t - I) vanishes");
}

/// Twisted Alexander polynomial (Wada invariant), canonically normalized.
/// Throws NonExactDivision when the quotient is not a Laurent polynomial.
template <class R>
LaurentPoly<R> wada(const Presentation& pres, const MatrixRep<R>& rep,
                    WadaDetail<std::type_identity_t<R>>* detail = nullptr, char omit = 0) {
  WadaDetail<R> w = wada_fraction(pres, rep, omit);
  LaurentPoly<R> q = canonical(exact_div(w.numerator, w.denominator));
  if (detail) *detail = std::move(w);
  return q;
}

void require_divides(long p, const TwoBridgeFraction& f);

/// Dihedral representation over Z[w]/theta_n for a two-bridge knot.
MatrixRep<QuotientElem> xi_rep(const Presentation& pres, long p);

/// Total twisted polynomial for the dihedral representation: the twisted
/// polynomial over Z[w] with the companion C_n substituted, then det.
IntPoly dihedral_total(const TwoBridgeFraction& f, long p);

/// Same quantity computed directly from the 2n-dimensional integer representation.
IntPoly dihedral_total_pi0(const TwoBridgeFraction& f, long p);

/// Twisted polynomial of the p-dimensional permutation representation.
IntPoly perm_dihedral_total(const TwoBridgeFraction& f, long p);
IntPoly perm_dihedral_total(const Presentation& pres, long p, const std::string& pattern);

struct BinaryDihedralResult {
  IntPoly total;          // det over Z[v] with C_p substituted
  IntPoly over_i;         // Delta_rho0(it) Delta_rho0(-it)
  bool cross_check = false;
};

BinaryDihedralResult binary_dihedral_total(const TwoBridgeFraction& f, long p);
/// Total via the substituted integer representation; works for any presentation.
IntPoly binary_dihedral_total(const Presentation& pres, long p, const std::string& pattern);

/// prod over primitive 2q-th roots zeta of Delta_rho0(zeta^k t).
IntPoly metacyclic_total(const TwoBridgeFraction& f, long q, long p);

struct NqpResult {
  IntPoly direct;          // Wada on the 2pq-dimensional permutation representation
  IntPoly product_formula; // cyclic products divided by 1 - t^{2q}
  bool match = false;
  bool exponents_divisible = false;  // all exponents = 0 mod 2q
};

NqpResult nqp_total(const TwoBridgeFraction& f, long q, long p, bool require_match = true);
IntPoly nqp_total(const Presentation& pres, long q, long p, const std::string& pattern);

struct KmetaReport {
  IntPoly twisted;              // Wada on the p-dimensional K-metacyclic representation
  IntPoly alexander;            // Delta_K
  std::optional<IntPoly> quotient;  // twisted * (1 - t) / Delta, when exact
  long order = 0;               // m = ord(k mod p)
  bool periodic_quotient = false;    // quotient is a polynomial in t^m
  std::string sigma_x, sigma_y; // cycle notation of the generator images
};

KmetaReport kmeta_total(const Presentation& pres, long p, long k, const std::string& pattern);

/// True when every nonzero exponent of p is a multiple of m.
bool exponents_multiple_of(const IntPoly& p, long m);

}  // namespace talex
