#pragma once

#include <string>
#include <vector>

#include "talex/knots.hpp"
#include "talex/matrix.hpp"
#include "talex/matrix_rep.hpp"
#include "talex/quotient.hpp"

namespace talex {

/// theta_n(z) = sum_k c_k z^k, c_k = C(n+k, 2k) + 2 C(n+k, 2k+1).
IntPoly theta(long n);
ModulusPtr theta_modulus(long n);

/// Images of the two dihedral-type generators together with their inverses.
template <class R>
struct GenPair {
  Matrix<R> x, x_inv, y, y_inv;
};

/// p x p permutation representation: x: i -> -i, y: i -> 1 - i (mod p).
GenPair<Int> dihedral_pi(long p);
/// The 2n x 2n irreducible integer representation.
GenPair<Int> dihedral_pi0(long p);
/// X = [[-1,1],[0,1]], Y = [[-1,0],[w,1]] over Z[w]/theta_n.
GenPair<QuotientElem> dihedral_xi(long p);
/// xi with the companion matrix C_n substituted for w.
GenPair<Int> dihedral_eta(long p);

/// Binary dihedral images over Z[v]/Phi_p: x -> [[0,1],[-1,0]], y -> [[0,v],[-v^-1,0]].
GenPair<QuotientElem> binary_dihedral(long p);
/// Same, with the companion of Phi_p substituted for v (integer, 2(p-1)-dimensional).
GenPair<Int> binary_dihedral_integer(long p);

/// Transposed companion of t^m - 1: the cyclic shift of order m.
Matrix<Int> cyclic_shift(long m);

/// x -> pi(x) (x) C, y -> pi(y) (x) C with C the cyclic shift of order 2q.
GenPair<Int> nqp_images(long q, long p);

/// Permutation matrices P[i][sigma(i)] = 1 on the points 0..p-1.
Matrix<Int> permutation_matrix(const std::vector<long>& sigma);
/// sigma(a): i -> i + 1.
Matrix<Int> sigma_a(long p);
/// sigma(s): i -> i * k^-1.
Matrix<Int> sigma_s(long p, long k);
/// Multiplicative order of k modulo p.
long multiplicative_order(long k, long p);
/// Cycle notation on the points 1..p, with p standing for 0; used for display.
std::string cycle_string(const Matrix<Int>& perm);

/// Builds a representation of `pres` where generator i receives X when
/// pattern[i] == 'X' and Y when 'Y'. Throws NoValidAssignment unless every
/// relator maps to the identity.
template <class R>
MatrixRep<R> build_rep(const Presentation& pres, const GenPair<R>& g, const std::string& pattern,
                       const std::string& name) {
  if (pattern.size() != pres.generators.size()) throw PreconditionError("assignment pattern length mismatch");
  MatrixRep<R> rep(name);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == 'X') rep.assign(pres.generators[i], g.x, g.x_inv);
    else if (pattern[i] == 'Y') rep.assign(pres.generators[i], g.y, g.y_inv);
    else throw PreconditionError("assignment pattern must use X and Y");
  }
  for (const auto& r : pres.relators)
    if (!rep.kills(r)) throw NoValidAssignment(name + ": relator " + r.to_string() + " is not killed");
  return rep;
}

/// Default pattern: first generator to X, others to Y.
std::string default_pattern(const Presentation& pres);

/// Tries the assignment pattern directly; if a relator survives, retries
/// with y replaced by its conjugates (XY)^j Y (XY)^-j.
template <class R>
MatrixRep<R> assign_with_fallback(const Presentation& pres, const GenPair<R>& g, const std::string& pattern,
                                  const std::string& name, long max_conjugates) {
  try {
    return build_rep(pres, g, pattern, name);
  } catch (const NoValidAssignment&) {
  }
  const Matrix<R> r = g.x * g.y;
  const Matrix<R> r_inv = g.y_inv * g.x_inv;
  Matrix<R> c = r, c_inv = r_inv;
  for (long j = 1; j < max_conjugates; ++j) {
    GenPair<R> alt{g.x, g.x_inv, c * g.y * c_inv, c * g.y_inv * c_inv};
    try {
      return build_rep(pres, alt, pattern, name);
    } catch (const NoValidAssignment&) {
    }
    c = c * r;
    c_inv = r_inv * c_inv;
  }
  throw NoValidAssignment(name + ": no generator assignment kills every relator");
}

/// (XY)^k for k = 0..p over Z[w]/theta_n.
struct XYPowerTable {
  long n = 0;
  std::vector<Matrix<QuotientElem>> powers;
  const QuotientElem& a(long k) const { return powers.at(static_cast<std::size_t>(k))(0, 0); }
  const QuotientElem& b(long k) const { return powers.at(static_cast<std::size_t>(k))(0, 1); }
  const QuotientElem& c(long k) const { return powers.at(static_cast<std::size_t>(k))(1, 0); }
  const QuotientElem& d(long k) const { return powers.at(static_cast<std::size_t>(k))(1, 1); }
};

XYPowerTable xy_power_table(long p);

/// K-metacyclic representation x -> sigma(s), y -> sigma(s) sigma(a)^j with
/// the smallest working j (pattern as in build_rep).
MatrixRep<Int> kmeta_rep(const Presentation& pres, long p, long k, const std::string& pattern);

void require_odd_prime(long p);

}  // namespace talex
