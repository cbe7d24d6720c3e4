#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

/// f = unit * t^shift * prod factors[i].first ^ factors[i].second, with every
/// factor primitive, irreducible over Z, of positive degree, and positive
/// leading coefficient. `unit` carries the integer content and sign.
struct IntFactorization {
  Int unit = 1;
  long shift = 0;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly expand() const;
};

Int content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);
IntPoly derivative(const IntPoly& f);  // polynomial part only (min_degree >= 0)

/// gcd in Z[t] via primitive pseudo-remainder sequences; positive leading coefficient.
IntPoly int_gcd(const IntPoly& a, const IntPoly& b);

/// Yun decomposition of a primitive polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

/// Complete factorization over Z (Zassenhaus: factor mod p, Hensel lift,
/// recombine). The seed only drives the randomized equal-degree splitting.
IntFactorization int_poly_factor(const IntPoly& f, std::uint64_t seed = 0x5eed);

/// For irreducible e(s), e(t^2) is either irreducible or +-phi(t) phi(-t);
/// returns phi in the second case.
std::optional<IntPoly> mirror_split(const IntPoly& e, std::uint64_t seed = 0x5eed);

}  // namespace talex
