#include "talex/knots.hpp"

#include <numeric>

#include "talex/det.hpp"
#include "talex/errors.hpp"

namespace talex {

TwoBridgeFraction::TwoBridgeFraction(long b, long a) : beta(b), alpha(a) {
  if (a <= 1 || b <= 0 || b >= a) throw PreconditionError("fraction must satisfy 0 < beta < alpha");
  if (a % 2 == 0) throw PreconditionError("alpha must be odd (even alpha gives a link)");
  if (std::gcd(a, b) != 1) throw PreconditionError("beta and alpha must be coprime");
}

TwoBridgeFraction parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw PreconditionError("expected beta/alpha, got '" + text + "'");
  try {
    std::size_t used = 0;
    long b = std::stol(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing");
    std::string rest = text.substr(slash + 1);
    long a = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return TwoBridgeFraction(b, a);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const PreconditionError*>(&e)) throw;
    throw PreconditionError("expected beta/alpha, got '" + text + "'");
  }
}

std::vector<int> epsilon_sequence(const TwoBridgeFraction& f) {
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(f.alpha - 1));
  for (long i = 1; i < f.alpha; ++i) eps.push_back(((i * f.beta) / f.alpha) % 2 == 0 ? 1 : -1);
  return eps;
}

FreeWord schubert_word(const TwoBridgeFraction& f) {
  // The sign sequence is palindromic only for odd beta. An even beta is
  // replaced by alpha - beta, the mirror image, whose group is isomorphic
  // with meridians preserved.
  const TwoBridgeFraction g = f.beta % 2 == 1 ? f : TwoBridgeFraction(f.alpha - f.beta, f.alpha);
  std::vector<Letter> w;
  auto eps = epsilon_sequence(g);
  for (std::size_t i = 0; i < eps.size(); ++i) w.push_back(Letter{i % 2 == 0 ? 'x' : 'y', eps[i]});
  return FreeWord(std::move(w));
}

Presentation presentation(const TwoBridgeFraction& f) {
  FreeWord w = schubert_word(f);
  FreeWord r = w * FreeWord::generator('x') * w.inverse() * FreeWord::generator('y', -1);
  return Presentation{"K(" + f.to_string() + ")", {'x', 'y'}, {r}};
}

bool has_preset(const std::string& name) { return name == "8_5"; }

Presentation preset(const std::string& name) {
  if (name == "8_5") {
    FreeWord r1 = FreeWord::parse("XYzyxYXY") * FreeWord::parse("x") * FreeWord::parse("yxyXYZyx") * FreeWord::parse("Y");
    FreeWord r2 = FreeWord::parse("yXYZX") * FreeWord::parse("y") * FreeWord::parse("xzyxY") * FreeWord::parse("Z");
    return Presentation{"8_5", {'x', 'y', 'z'}, {r1, r2}};
  }
  throw PreconditionError("unknown preset '" + name + "'");
}

std::string ContinuedFraction::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + std::to_string(entries[i]);
  return s + "]";
}

mpq_class cf_eval(const ContinuedFraction& c) {
  if (c.entries.empty()) throw PreconditionError("empty continued fraction");
  mpq_class tail = 0;  // value of the suffix after the current entry
  for (std::size_t i = c.entries.size(); i-- > 0;) {
    mpq_class denom = mpq_class(c.entries[i]) + tail;
    if (sgn(denom) == 0) throw PreconditionError("continued fraction has a vanishing denominator");
    tail = 1 / denom;
  }
  tail.canonicalize();
  return tail;
}

namespace {

// Candidate multipliers in the order 1, -1, 2, -2, ...
std::vector<long> alternating(long bound) {
  std::vector<long> out;
  for (long k = 1; k <= bound; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

bool search(const mpq_class& target, std::size_t remaining, long p, const HpBounds& b,
            std::vector<long>& acc) {
  // target must equal 1/(a + tail); at p-multiple positions we may close directly.
  if (sgn(target) == 0) return false;
  mpq_class inv = 1 / target;
  inv.canonicalize();
  if (remaining == 1) {
    if (inv.get_den() != 1) return false;
    Int a = inv.get_num();
    if (sgn(a) == 0 || !mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) return false;
    if (!a.fits_slong_p()) return false;
    acc.push_back(a.get_si());
    return true;
  }
  for (long k : alternating(b.max_k)) {
    // Tails built from entries of absolute value >= 2 have absolute value
    // <= 1, so larger remainders cannot close; pruning keeps the search order.
    mpq_class after_a = inv - p * k;
    if (sgn(after_a) == 0 || abs(after_a) > 1) continue;
    mpq_class inv2 = 1 / after_a;  // = 2m + tail
    for (long m : alternating(b.max_m)) {
      mpq_class rest = inv2 - 2 * m;
      if (sgn(rest) == 0 || abs(rest) > 1) continue;
      acc.push_back(p * k);
      acc.push_back(2 * m);
      if (search(rest, remaining - 2, p, b, acc)) return true;
      acc.pop_back();
      acc.pop_back();
    }
  }
  return false;
}

std::optional<ContinuedFraction> expand(const mpq_class& target, long p, const HpBounds& bounds) {
  for (long len = 1; len <= bounds.max_length; len += 2) {
    std::vector<long> acc;
    if (search(target, static_cast<std::size_t>(len), p, bounds, acc)) return ContinuedFraction{acc};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ContinuedFraction> hp_expansion(const TwoBridgeFraction& f, long p, const HpBounds& bounds) {
  if (!is_prime(p)) throw PreconditionError("hp_expansion: p must be prime");
  return expand(mpq_class(f.beta, f.alpha), p, bounds);
}

std::optional<HpWitness> hp_member(const TwoBridgeFraction& f, long p, const HpBounds& bounds) {
  if (!is_prime(p)) throw PreconditionError("hp_member: p must be prime");
  Int inv;
  mpz_invert(inv.get_mpz_t(), Int(f.beta).get_mpz_t(), Int(f.alpha).get_mpz_t());
  const long b_inv = inv.get_si();
  for (long b : {f.beta, f.beta - f.alpha, b_inv, b_inv - f.alpha}) {
    mpq_class r(b, f.alpha);
    r.canonicalize();
    if (auto cf = expand(r, p, bounds)) return HpWitness{r, *cf};
  }
  return std::nullopt;
}

IntPoly alexander(const Presentation& pres) {
  const std::size_t k = pres.generators.size();
  if (k < 2 || pres.relators.size() != k - 1) throw PreconditionError("alexander: need a deficiency-one presentation");
  Matrix<IntPoly> m(k - 1, k - 1);
  for (std::size_t i = 0; i < k - 1; ++i)
    for (std::size_t j = 0; j < k - 1; ++j) m(i, j) = psi_evaluate(fox_derivative(pres.relators[i], pres.generators[j]));
  IntPoly d = bareiss_det(m);
  if (d.is_zero()) throw PreconditionError("alexander: degenerate presentation");
  return canonical(d);
}

}  // namespace talex
