#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "talex/fox.hpp"
#include "talex/laurent.hpp"

namespace talex {

/// r = beta/alpha with 0 < beta < alpha, gcd 1, alpha odd.
struct TwoBridgeFraction {
  long beta = 1;
  long alpha = 3;

  TwoBridgeFraction() = default;
  TwoBridgeFraction(long b, long a);  // validates
  std::string to_string() const { return std::to_string(beta) + "/" + std::to_string(alpha); }
  bool operator==(const TwoBridgeFraction& o) const { return beta == o.beta && alpha == o.alpha; }
};

/// Parses "beta/alpha"; throws PreconditionError on malformed or invalid input.
TwoBridgeFraction parse_fraction(const std::string& text);

/// Schubert signs eps_i = (-1)^floor(i*beta/alpha), i = 1..alpha-1.
std::vector<int> epsilon_sequence(const TwoBridgeFraction& f);

struct Presentation {
  std::string name;
  std::vector<char> generators;
  std::vector<FreeWord> relators;

  std::size_t deficiency() const { return generators.size() - relators.size(); }
};

/// <x, y | W x W^-1 y^-1> with W = x^eps1 y^eps2 x^eps3 ...
Presentation presentation(const TwoBridgeFraction& f);

/// Named presets; currently "8_5".
Presentation preset(const std::string& name);
bool has_preset(const std::string& name);

/// The word W of the standard relator, built from the odd one of beta and alpha - beta.
FreeWord schubert_word(const TwoBridgeFraction& f);

struct ContinuedFraction {
  std::vector<long> entries;
  std::string to_string() const;
  bool operator==(const ContinuedFraction& o) const { return entries == o.entries; }
};

/// 1/(a1 + 1/(a2 + ... + 1/ak)); throws PreconditionError on a zero denominator.
mpq_class cf_eval(const ContinuedFraction& c);

struct HpBounds {
  long max_k = 4;
  long max_m = 8;
  long max_length = 7;
};

/// Searches for [p k1, 2 m1, p k2, ..., p k_{l+1}] evaluating to beta/alpha.
/// nullopt means nothing was found within the bounds (inconclusive).
std::optional<ContinuedFraction> hp_expansion(const TwoBridgeFraction& f, long p, const HpBounds& bounds = {});

/// An expansion found for some fraction of the same knot type.
struct HpWitness {
  mpq_class fraction;  // beta'/alpha with beta' = beta^(+-1) mod alpha, in (-1, 1)
  ContinuedFraction expansion;
};

/// H(p) membership up to knot equivalence: tries beta/alpha, (beta - alpha)/alpha
/// and the same for the inverse of beta mod alpha. Mirrors need no separate
/// pass because negating every entry negates the value.
std::optional<HpWitness> hp_member(const TwoBridgeFraction& f, long p, const HpBounds& bounds = {});

/// Alexander polynomial from the Fox matrix of a deficiency-one Wirtinger
/// presentation (minor omitting the last generator), canonically normalized.
IntPoly alexander(const Presentation& pres);

}  // namespace talex
