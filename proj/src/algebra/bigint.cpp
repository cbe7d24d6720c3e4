#include "talex/bigint.hpp"

#include <stdexcept>

namespace talex {

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::optional<Int> divide_exact(const Int& a, const Int& b) {
  if (sgn(b) == 0) return std::nullopt;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int power(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const Int& x) { return x.get_str(10); }

Int parse_int(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  // mpz_class rejects a leading '+'.
  Int r(text.substr(text[0] == '+' ? 1 : 0), 10);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace talex
