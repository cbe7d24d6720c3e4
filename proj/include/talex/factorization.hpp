#pragma once

#include <optional>
#include <vector>
#include <string>

#include "json.hpp"
#include "talex/knots.hpp"
#include "talex/matrix.hpp"
#include "talex/quotient.hpp"

namespace talex {

/// A 2x2 matrix polynomial over Z[w]/theta_n of the form
///   [[G - 2H, H], [w H, G + 2H]]
/// with G even and H odd in t, i.e. G(t) 1 + H(t) (X + Y).
struct SplitForm {
  ModulusPtr modulus;
  QPoly G;
  QPoly H;

  Matrix<QPoly> reconstruct() const;
  bool parity_ok() const;
};

/// Some(SplitForm) iff even-degree coefficients are scalar and odd-degree
/// coefficients are multiples of X + Y = [[-2, 1], [w, 2]].
std::optional<SplitForm> split_check(const Matrix<QPoly>& m, const ModulusPtr& modulus);

/// y^-1 t^-1 {(1 - yt) Q_k yt [+ (yx)^(k+1) t^(2k+2)]} (1 - xt) under xi, where
/// Q_k = sum_{j<=k} (yx)^j t^(2j).
Matrix<QPoly> q_element(long p, long k, bool tail);

/// The four split elements: k = 2n; n with tail; 3n+1 with tail; 4n+1.
/// The last one equals (1 + t^(2p)) times the first because (yx)^p = 1;
/// with k = 4n the top term is missing and the element is not split.
Matrix<QPoly> split_element(long p, int which);

/// g, h for the torus knot K(1/p) built from b_k = ((XY)^k)_{12}; checks
/// g^2 - (4 + w) h^2 against the Wada invariant under xi.
SplitForm torus_gh(long p);

/// Which matrix passed the split test in extract_GH.
enum class SplitSource { ConjugatedQuotient, Quotient };

struct ExtractResult {
  std::optional<SplitForm> form;
  std::optional<SplitSource> source;
  // Empty on success; otherwise why the split failed.
  std::string failure;
};

/// Matrix quotient N = xi(dR/dx) adj(xi(dR0/dx)) / det xi(dR0/dx), with R0 the
/// K(1/p) relator. Tries S = xi(y)^-1 t^-1 N, then N itself.
ExtractResult extract_GH(const TwoBridgeFraction& f, long p);

/// det[gamma(G) - V_n gamma(H)] with gamma: w -> C_n. Throws
/// CertificateFailure when gamma(G), gamma(H) do not commute with V_n.
IntPoly split_determinant(const SplitForm& s, long p);

struct FactorCertificate {
  IntPoly D;  // dihedral_total(f, p)
  IntPoly q;  // torus part
  IntPoly f;  // knot-specific part
  IntPoly F;  // q * f, canonical and lexicographically below F(-t)
  SplitSource source = SplitSource::ConjugatedQuotient;
};

/// Constructive F with F(t) F(-t) = D. Throws NotSplit (as PreconditionError
/// subclass below) when extract_GH fails and CertificateFailure when the
/// product does not reproduce D.
FactorCertificate f_polynomial(const TwoBridgeFraction& f, long p);

class NotSplit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical choice between F and F(-t).
IntPoly pair_representative(const IntPoly& F);

/// Integer-factorization fallback: some f with f(t) f(-t) = D up to units.
std::optional<IntPoly> factor_pairing(const IntPoly& D);

/// Every such f up to units and t -> -t (at most `limit` of them). Empty
/// when no pairing exists.
std::vector<IntPoly> factor_pairings(const IntPoly& D, std::size_t limit = 4096);

/// Whether some pairing f of D satisfies f = {Delta/(1+t)}^n mod p up to units.
bool modp_f_congruence(const IntPoly& D, const IntPoly& alexander_poly, long p, std::size_t limit = 4096);

/// Same question for a two-bridge knot. When the knot splits, q f and q f(-t)
/// are pairings already, so they are tried before factoring D.
bool modp_f_congruence(const TwoBridgeFraction& f, long p, std::size_t limit = 4096);

/// (1 + t)^n Delta_{K(1/p)}^{n-1}, the conjectured torus part.
IntPoly torus_part_prediction(long p);

struct ConjectureReport {
  IntPoly D;
  std::optional<IntPoly> F;
  IntPoly q;
  std::optional<IntPoly> f;
  bool split = false;
  bool factorization_exists = false;  // constructive or via factor_pairing
  std::string hp;                     // "yes" or "inconclusive"
  bool modp = false;                  // some pairing f of D has f = (Delta/(1+t))^n mod p
  std::optional<bool> torus_prediction;  // q matches (1+t)^n Delta^(n-1)
  std::string failure;

  nlohmann::json to_json() const;
};

ConjectureReport conjecture_report(const TwoBridgeFraction& f, long p);

}  // namespace talex
