#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace talex {

/// Arbitrary-precision integer used for every coefficient in the library.
using Int = mpz_class;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline int sign_of(const Int& x) { return sgn(x); }

/// Binomial coefficient; zero outside 0 <= k <= n.
Int binomial(long n, long k);

/// a / b when b divides a exactly, nullopt otherwise (including b == 0).
std::optional<Int> divide_exact(const Int& a, const Int& b);

Int power(const Int& base, unsigned long exp);

std::string to_string(const Int& x);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
Int parse_int(const std::string& text);

bool is_prime(long n);

/// a mod m in [0, m).
long mod_floor(long a, long m);

}  // namespace talex
