#include "talex/fp_poly.hpp"

#include <algorithm>
#include <cstdint>

namespace talex {

namespace {

constexpr long kWordPrime = 1L << 31;  // below this, products of residues fit in 62 bits

inline long mulmod(long a, long b, long p) {
  if (p < kWordPrime) return static_cast<long>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) % static_cast<std::uint64_t>(p));
  return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

}  // namespace

long fp_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod_floor(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t, nt);
    nt -= q * t;
    std::swap(r, nr);
    nr -= q * r;
  }
  if (r != 1) throw PreconditionError("fp_inverse: element not invertible");
  return mod_floor(t, p);
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x = mod_floor(x, p_);
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from_int(const IntPoly& f, long p) {
  if (f.min_degree() < 0) throw PreconditionError("FpPoly::from_int: negative powers");
  std::vector<long> c(static_cast<std::size_t>(f.max_degree() + 1), 0);
  Int r;
  for (long d = f.min_degree(); d <= f.max_degree(); ++d) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeff(d).get_mpz_t(), static_cast<unsigned long>(p));
    c[static_cast<std::size_t>(d)] = r.get_si();
  }
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::x(long p) { return FpPoly(p, {0, 1}); }
FpPoly FpPoly::constant(long p, long c) { return FpPoly(p, {c}); }

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + o.scaled(p_ - 1); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (c_.empty() || o.c_.empty()) return FpPoly(p_, {});
  std::vector<long> r(c_.size() + o.c_.size() - 1, 0);
  const std::uint64_t up = static_cast<std::uint64_t>(p_);
  // Accumulate unreduced when no coefficient sum can overflow 64 bits.
  if (p_ < kWordPrime && std::min(c_.size(), o.c_.size()) <= UINT64_MAX / ((up - 1) * (up - 1) + 1)) {
    std::vector<std::uint64_t> acc(r.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const std::uint64_t a = static_cast<std::uint64_t>(c_[i]);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += a * static_cast<std::uint64_t>(o.c_[j]);
    }
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<long>(acc[k] % up);
    return FpPoly(p_, std::move(r));
  }
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(long s) const {
  std::vector<long> r(c_);
  s = mod_floor(s, p_);
  for (auto& x : r) x = mulmod(x, s, p_);
  return FpPoly(p_, std::move(r));
}

void FpPoly::divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const {
  if (d.is_zero()) throw PreconditionError("FpPoly: division by zero");
  std::vector<long> rem = c_;
  const long dd = d.degree();
  const long inv = fp_inverse(d.lead(), p_);
  std::vector<long> quo(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0, 0);
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    long top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    long f = mulmod(top, inv, p_);
    quo[static_cast<std::size_t>(k - dd)] = f;
    // slot - f d_j = slot + (p - f) d_j (mod p), all residues in [0, p).
    const long neg = p_ - f;
    for (long j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - dd + j)];
      slot = static_cast<long>((static_cast<unsigned __int128>(slot) + mulmod(neg, d.c_[static_cast<std::size_t>(j)], p_)) % static_cast<std::uint64_t>(p_));
    }
  }
  q = FpPoly(p_, std::move(quo));
  r = FpPoly(p_, std::move(rem));
}

FpPoly FpPoly::operator%(const FpPoly& d) const {
  FpPoly q, r;
  divmod(d, q, r);
  return r;
}

FpPoly FpPoly::operator/(const FpPoly& d) const {
  FpPoly q, r;
  divmod(d, q, r);
  return q;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(fp_inverse(lead(), p_));
}

FpPoly FpPoly::derivative() const {
  std::vector<long> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(mulmod(c_[i], static_cast<long>(i) % p_, p_));
  return FpPoly(p_, std::move(r));
}

IntPoly FpPoly::to_int_symmetric() const {
  std::vector<Int> r;
  r.reserve(c_.size());
  for (long x : c_) r.emplace_back(x > p_ / 2 ? x - p_ : x);
  return IntPoly(0, std::move(r));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
  const long p = a.prime();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p, {});
  FpPoly t0(p, {}), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    FpPoly q, r;
    r0.divmod(r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    FpPoly nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  const long inv = fp_inverse(r0.lead(), p);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
  FpPoly result = FpPoly::constant(base.prime(), 1) % mod;
  FpPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

namespace {

// Splits a product of distinct monic irreducibles, all of degree d.
void equal_degree_split(const FpPoly& f, long d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const long p = f.prime();
  Int e = power(Int(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<long> dist(0, p - 1);
  while (true) {
    std::vector<long> a(static_cast<std::size_t>(f.degree()));
    for (auto& c : a) c = dist(rng);
    FpPoly r(p, std::move(a));
    if (r.degree() < 1) continue;
    FpPoly g = fp_gcd(f, fp_powmod(r, e, f) - FpPoly::constant(p, 1));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f_in, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  FpPoly f = f_in.monic();
  if (f.degree() < 1) return out;
  const long p = f.prime();
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % f;
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    h = fp_powmod(h, Int(p), f);
    FpPoly g = fp_gcd(f, h - x);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace talex
