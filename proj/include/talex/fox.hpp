#pragma once

#include <map>
#include <string>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

struct Letter {
  char gen;  // lowercase generator name
  int exp;   // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
  bool operator<(const Letter& o) const { return gen != o.gen ? gen < o.gen : exp < o.exp; }
};

/// Freely reduced word in the free group on lowercase letters.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  /// Text syntax: lowercase letter = generator, uppercase = inverse, an
  /// optional ^k suffix (k may be negative) repeats the preceding letter.
  static FreeWord parse(const std::string& text);
  static FreeWord generator(char g, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord power(long k) const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Finite Z-linear combination of free-group words.
class GroupRingSum {
 public:
  GroupRingSum() = default;
  GroupRingSum(const FreeWord& w, Int c = 1);  // NOLINT(google-explicit-constructor)

  static GroupRingSum one() { return GroupRingSum(FreeWord()); }

  const std::map<FreeWord, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingSum& add(const FreeWord& w, const Int& c);
  friend GroupRingSum operator+(GroupRingSum a, const GroupRingSum& b);
  friend GroupRingSum operator-(GroupRingSum a, const GroupRingSum& b);
  friend GroupRingSum operator*(const GroupRingSum& a, const GroupRingSum& b);
  GroupRingSum scaled(const Int& c) const;
  bool operator==(const GroupRingSum& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::map<FreeWord, Int> terms_;
};

GroupRingSum fox_derivative(const FreeWord& r, char g);

/// Exponent sum of the word (every generator abelianizes to t).
long abelianize(const FreeWord& w);

/// Image under the abelianization g -> t.
IntPoly psi_evaluate(const GroupRingSum& s);

/// sum_j (dR/dg_j)(g_j - 1) == R - 1 in the free group ring.
bool fundamental_identity_holds(const FreeWord& r, const std::vector<char>& generators);

}  // namespace talex
