#include "talex/poly_factor.hpp"

#include <algorithm>
#include <functional>

#include "talex/fp_poly.hpp"

namespace talex {

IntPoly IntFactorization::expand() const {
  IntPoly r(unit);
  for (const auto& [f, e] : factors) r = r * pow(f, static_cast<unsigned long>(e));
  return r.shift(shift);
}

Int content(const IntPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Int g = content(f);
  if (sgn(f.leading()) < 0) g = -g;
  return f.map_coeffs([&](const Int& c) { return Int(c / g); });
}

IntPoly derivative(const IntPoly& f) {
  if (f.min_degree() < 0) throw PreconditionError("derivative: negative powers");
  std::vector<Int> out;
  for (long d = 1; d <= f.max_degree(); ++d) out.push_back(f.coeff(d) * d);
  return IntPoly(0, std::move(out));
}

namespace {

// Pseudo-remainder of a by b (both with min_degree 0).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const long db = b.max_degree();
  const Int& lb = b.leading();
  while (!a.is_zero() && a.max_degree() >= db) {
    const long shift = a.max_degree() - db;
    Int la = a.leading();
    a = a.scaled(lb) - b.scaled(la).shift(shift);
  }
  return a;
}

}  // namespace

IntPoly int_gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), content(a_in).get_mpz_t(), content(b_in).get_mpz_t());
  IntPoly a = primitive_part(a_in.lowered());
  IntPoly b = primitive_part(b_in.lowered());
  if (a.max_degree() < b.max_degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a).scaled(cg);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f_in) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = primitive_part(f_in.lowered());
  if (f.max_degree() < 1) return out;
  IntPoly df = derivative(f);
  IntPoly a = int_gcd(f, df);
  IntPoly b = exact_div(f, a);
  IntPoly c = exact_div(df, a);
  IntPoly d = c - derivative(b);
  for (int i = 1; b.max_degree() >= 1; ++i) {
    IntPoly g = int_gcd(b, d);
    if (g.max_degree() >= 1) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
  }
  return out;
}

namespace {

Int sym_mod(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (r * 2 > m) r -= m;
  return r;
}

IntPoly reduce_sym(const IntPoly& f, const Int& m) {
  return f.map_coeffs([&](const Int& c) { return sym_mod(c, m); });
}

FpPoly to_fp(const IntPoly& f, long p) { return FpPoly::from_int(f, p); }

const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                        59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};

struct Lifted {
  std::vector<IntPoly> factors;  // lifts of the monic modular factors, symmetric residues
  Int modulus;                   // p^k beyond twice the factor coefficient bound
};

// Linear Hensel lifting of f = lc * prod g_i (mod p), g_i monic and pairwise coprime.
Lifted hensel_lift(const IntPoly& f, long p, const std::vector<FpPoly>& mod_factors) {
  const long n = f.max_degree();
  const Int lc = f.leading();
  // Coefficient bound for any factor (scaled by lc): Mignotte-style 2^n * ||f||_2, with ||f||_2 <= sqrt(n+1) * max|c|.
  Int maxc = 0;
  for (const auto& c : f.coeffs()) maxc = std::max<Int>(maxc, abs(c));
  Int bound = power(Int(2), static_cast<unsigned long>(n)) * maxc * (n + 1) * abs(lc) * 2 + 1;
  Int pk = p;
  long k = 1;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  // Partial-fraction cofactors s_i = (prod_{j != i} g_j)^{-1} mod g_i over F_p.
  const std::size_t r = mod_factors.size();
  std::vector<FpPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly others = FpPoly::constant(p, 1);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = others * mod_factors[j];
    FpPoly u, v;
    FpPoly g = fp_xgcd(others % mod_factors[i], mod_factors[i], u, v);
    if (g.degree() != 0) throw CertificateFailure("int_poly_factor: modular factors not coprime");
    s[i] = u;
  }

  std::vector<IntPoly> g(r);
  for (std::size_t i = 0; i < r; ++i) g[i] = mod_factors[i].to_int_symmetric();
  Int pj = p;
  const long lc_inv = fp_inverse(mpz_fdiv_ui(lc.get_mpz_t(), static_cast<unsigned long>(p)), p);
  for (long step = 1; step < k; ++step) {
    IntPoly prod(lc);
    for (const auto& gi : g) prod = prod * gi;
    IntPoly e = f - prod;
    // e is divisible by p^step.
    IntPoly ep = e.map_coeffs([&](const Int& c) {
      Int q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
      return q;
    });
    FpPoly efp = to_fp(ep, p).scaled(lc_inv);
    for (std::size_t i = 0; i < r; ++i) {
      FpPoly delta = (efp * s[i]) % mod_factors[i];
      g[i] = g[i] + delta.to_int_symmetric().scaled(pj);
    }
    pj *= p;
  }
  for (auto& gi : g) gi = reduce_sym(gi, pj);
  return {std::move(g), pj};
}

// Factors of a squarefree primitive f with positive leading coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f, std::mt19937_64& rng) {
  const long n = f.max_degree();
  if (n <= 1) return {f};
  const Int lc = f.leading();
  const IntPoly df = derivative(f);

  // Prime choice: a few admissible primes, keep the one with fewest modular factors.
  long best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (long p : kPrimes) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    FpPoly fp = to_fp(f, p);
    if (fp_gcd(fp, fp.derivative()).degree() > 0) continue;
    auto facs = fp_factor_squarefree(fp, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++tried >= 6) break;
  }
  if (best_p == 0) throw CertificateFailure("int_poly_factor: no admissible prime found");
  if (best.size() == 1) return {f};
  const long p = best_p;

  const std::size_t r = best.size();
  const Lifted lifted = hensel_lift(f, p, best);
  const std::vector<IntPoly>& g = lifted.factors;
  const Int& pj = lifted.modulus;

  // Recombination by subsets of increasing size.
  std::vector<IntPoly> result;
  std::vector<std::size_t> live(r);
  for (std::size_t i = 0; i < r; ++i) live[i] = i;
  IntPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= live.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == size) {
        Int rlc = rest.leading();
        IntPoly cand(rlc);
        for (std::size_t idx : pick) cand = reduce_sym(cand * g[live[idx]], pj);
        // Quick constant-term screen before the full division.
        IntPoly pc = primitive_part(cand);
        if (pc.is_zero() || pc.min_degree() != 0) return false;
        if (!mpz_divisible_p(rest.coeff(0).get_mpz_t(), pc.coeff(0).get_mpz_t())) return false;
        try {
          IntPoly q = exact_div(rest, pc);
          result.push_back(pc);
          rest = q;
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < live.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(live[i]);
          live = std::move(keep);
          return true;
        } catch (const NonExactDivision&) {
          return false;
        }
      }
      for (std::size_t i = start; i < live.size(); ++i) {
        pick[depth] = i;
        if (search(i + 1, depth + 1)) return true;
      }
      return false;
    };
    found = search(0, 0);
    if (!found) ++size;
  }
  result.push_back(primitive_part(rest));
  return result;
}

}  // namespace

std::optional<IntPoly> mirror_split(const IntPoly& e_in, std::uint64_t seed) {
  const IntPoly e = primitive_part(e_in.lowered());
  if (e.max_degree() < 1 || sgn(e.coeff(0)) == 0) return std::nullopt;
  IntPoly g;  // e(t^2)
  for (long d = 0; d <= e.max_degree(); ++d) g += IntPoly::monomial(e.coeff(d), 2 * d);
  const Int lc = g.leading();
  std::mt19937_64 rng(seed);

  // Modulo a prime where g stays squarefree, a factor fixed by t -> -t rules
  // out g = phi(t) phi(-t); otherwise the factors pair up with their mirrors.
  long best_p = 0;
  std::vector<FpPoly> best;
  std::vector<std::pair<std::size_t, std::size_t>> best_pairs;
  int tried = 0;
  for (long p : kPrimes) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    const FpPoly gp = to_fp(g, p);
    if (fp_gcd(gp, gp.derivative()).degree() > 0) continue;
    std::vector<FpPoly> facs = fp_factor_squarefree(gp, rng);
    std::vector<FpPoly> mirrors;
    for (const auto& h : facs) mirrors.push_back(FpPoly::from_int(h.to_int_symmetric().negate_t(), p).monic());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> used(facs.size(), false);
    for (std::size_t i = 0; i < facs.size(); ++i) {
      if (used[i]) continue;
      if (mirrors[i] == facs[i]) return std::nullopt;
      std::size_t j = i + 1;
      while (j < facs.size() && !(facs[j] == mirrors[i])) ++j;
      if (j == facs.size()) throw CertificateFailure("mirror_split: modular factors are not closed under t -> -t");
      used[i] = used[j] = true;
      pairs.emplace_back(i, j);
    }
    if (best_p == 0 || pairs.size() < best_pairs.size()) {
      best_p = p;
      best = std::move(facs);
      best_pairs = std::move(pairs);
    }
    if (++tried >= 6) break;
  }
  if (best_p == 0) throw CertificateFailure("mirror_split: no admissible prime found");

  const Lifted lifted = hensel_lift(g, best_p, best);
  const std::size_t m = best_pairs.size();
  // phi and phi(-t) are both answers, so the first pair's choice is fixed.
  for (unsigned long mask = 0; mask < (1UL << (m - 1)); ++mask) {
    IntPoly cand(lc);
    for (std::size_t k = 0; k < m; ++k) {
      const bool second = k > 0 && ((mask >> (k - 1)) & 1);
      const std::size_t idx = second ? best_pairs[k].second : best_pairs[k].first;
      cand = reduce_sym(cand * lifted.factors[idx], lifted.modulus);
    }
    const IntPoly phi = primitive_part(cand);
    if (phi.is_zero() || phi.min_degree() != 0) continue;
    if (!mpz_divisible_p(g.coeff(0).get_mpz_t(), phi.coeff(0).get_mpz_t())) continue;
    try {
      const IntPoly rest = exact_div(g, phi);
      if (rest == phi.negate_t() || rest == -phi.negate_t()) return phi;
    } catch (const NonExactDivision&) {
    }
  }
  return std::nullopt;
}

IntFactorization int_poly_factor(const IntPoly& f_in, std::uint64_t seed) {
  if (f_in.is_zero()) throw PreconditionError("int_poly_factor: zero polynomial");
  std::mt19937_64 rng(seed);
  IntFactorization out;
  out.shift = f_in.min_degree();
  IntPoly f = f_in.lowered();
  out.unit = content(f);
  if (sgn(f.leading()) < 0) out.unit = -out.unit;
  f = primitive_part(f);
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    for (auto& q : zassenhaus(part, rng)) out.factors.emplace_back(std::move(q), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.max_degree() != b.first.max_degree()) return a.first.max_degree() < b.first.max_degree();
    if (lex_less(a.first, b.first) != lex_less(b.first, a.first)) return lex_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

}  // namespace talex
