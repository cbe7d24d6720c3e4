#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "talex/bigint.hpp"
#include "talex/laurent.hpp"

namespace talex {

/// Dense polynomial over F_p for a small odd prime p (p < 2^31).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(long p, std::vector<long> coeffs);
  static FpPoly from_int(const IntPoly& f, long p);  // requires min_degree >= 0
  static FpPoly x(long p);
  static FpPoly constant(long p, long c);

  long prime() const { return p_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<long>& coeffs() const { return c_; }
  long lead() const { return c_.empty() ? 0 : c_.back(); }
  long coeff(long d) const { return d >= 0 && d < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(d)] : 0; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(long s) const;
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  void divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const;
  FpPoly operator%(const FpPoly& d) const;
  FpPoly operator/(const FpPoly& d) const;

  FpPoly monic() const;
  FpPoly derivative() const;

  /// Lifts to the symmetric integer range (-p/2, p/2].
  IntPoly to_int_symmetric() const;

 private:
  void trim();
  long p_ = 0;
  std::vector<long> c_;
};

long fp_inverse(long a, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic (or zero)
/// Extended gcd: s*a + t*b = g with g monic.
FpPoly fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t);
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod);

/// Monic irreducible factors of a squarefree monic polynomial over F_p
/// (distinct-degree split followed by Cantor-Zassenhaus).
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, std::mt19937_64& rng);

}  // namespace talex
