#pragma once

#include "talex/fp_poly.hpp"
#include "talex/knots.hpp"
#include "talex/laurent.hpp"

namespace talex {

/// Reduction mod p of a Laurent polynomial after shifting to min degree 0.
FpPoly reduce_mod(const IntPoly& f, long p);

/// a = c t^k b in (Z/p)[t^{±1}] for some unit c and integer k.
bool equal_mod_p_up_to_units(const IntPoly& a, const IntPoly& b, long p);

/// {Delta(t)/(1+t)}^n mod p, which the factor f of the total polynomial reduces to.
FpPoly expected_f_mod_p(const IntPoly& alexander, long p);

struct ModpReport {
  bool applicable = false;  // Delta(-1) = 0 mod p
  bool total_congruence = false;  // D = {Delta/(1+t)}^n {Delta(-t)/(1-t)}^n mod p
};

ModpReport modp_congruence(const TwoBridgeFraction& f, long p);

/// Metacyclic variant: nqp total = {prod Delta(zeta^k t)}^p / (1 - t^{2q})^p mod p.
bool modp_nqp_congruence(const TwoBridgeFraction& f, long q, long p);

struct TriangularReport {
  /// With the two n-blocks interleaved as (f_1, e_1, f_2, e_2, ...), where e_i
  /// spans the first block and f_i the second, the matrix is lower triangular.
  bool lower_triangular = false;
  bool diagonals_match = false;  // first block ~ Delta(-t), second block ~ Delta(t)
  bool ok() const { return lower_triangular && diagonals_match; }
};

/// Structure of the gamma-substituted Fox matrix image modulo p.
TriangularReport modp_triangular_structure(const TwoBridgeFraction& f, long p);

}  // namespace talex
