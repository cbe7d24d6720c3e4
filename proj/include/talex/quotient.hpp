#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "talex/bigint.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

/// Monic integer polynomial m(z) = z^d + c_{d-1} z^{d-1} + ... + c_0 defining
/// the ring Z[z]/(m). Moduli are compared by value.
struct Modulus {
  std::vector<Int> low;  // c_0 .. c_{d-1}; the leading 1 is implicit
  std::string name;      // printed symbol for z (e.g. "w", "v")

  std::size_t degree() const { return low.size(); }
  IntPoly as_poly() const;
  bool operator==(const Modulus& o) const { return low == o.low; }
};

using ModulusPtr = std::shared_ptr<const Modulus>;

/// Builds a modulus from a monic polynomial with min_degree 0.
ModulusPtr make_modulus(const IntPoly& monic, std::string name = "w");

/// Element of Z[z]/(m). A null modulus marks a plain integer that adopts the
/// modulus of whatever it is combined with; this keeps R() and R(1L) usable
/// as ring-agnostic zero and one inside generic containers.
class QuotientElem {
 public:
  QuotientElem() = default;
  QuotientElem(long c) : residue_{Int(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit QuotientElem(const Int& c) : residue_{c} { trim(); }
  QuotientElem(ModulusPtr m, std::vector<Int> residue);

  /// The class of z in Z[z]/(m).
  static QuotientElem generator(const ModulusPtr& m);
  static QuotientElem constant(const ModulusPtr& m, const Int& c);

  const ModulusPtr& modulus() const { return modulus_; }
  const std::vector<Int>& residue() const { return residue_; }
  bool is_zero() const { return residue_.empty(); }
  /// True when the element is an integer (residue of degree <= 0).
  bool is_integer() const { return residue_.size() <= 1; }
  Int integer_value() const { return residue_.empty() ? Int(0) : residue_[0]; }

  friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b);
  QuotientElem operator-() const;
  friend bool operator==(const QuotientElem& a, const QuotientElem& b);

  /// The integer matrix r(C) obtained by substituting C for z in the residue.
  Matrix<Int> substitute(const Matrix<Int>& c) const;

  /// Matrix of multiplication by this element on the basis 1, z, ..., z^{d-1}.
  Matrix<Int> multiplication_matrix(const ModulusPtr& m) const;

  std::string to_string() const;

 private:
  void trim();
  void reduce();

  ModulusPtr modulus_;
  std::vector<Int> residue_;
};

inline bool is_zero(const QuotientElem& x) { return x.is_zero(); }

/// Sign of the first nonzero residue entry; used only for canonical normalization.
int sign_of(const QuotientElem& x);

/// a / b in Z[z]/(m) when the quotient exists with integer residue.
std::optional<QuotientElem> divide_exact(const QuotientElem& a, const QuotientElem& b);

std::string to_string(const QuotientElem& x);

using QPoly = LaurentPoly<QuotientElem>;

std::string to_string(const QPoly& p, const std::string& var = "t");

/// Lifts an integer polynomial into Z[z]/(m)[t^{±1}].
QPoly lift(const IntPoly& p, const ModulusPtr& m);

/// Returns p as an integer polynomial if every coefficient is an integer.
std::optional<IntPoly> to_int_poly(const QPoly& p);

}  // namespace talex
