#include "talex/factorization.hpp"

#include <algorithm>

#include "talex/det.hpp"
#include "talex/errors.hpp"
#include "talex/json_io.hpp"
#include "talex/modp.hpp"
#include "talex/poly_factor.hpp"
#include "talex/representations.hpp"
#include "talex/twisted.hpp"

namespace talex {

namespace {

Matrix<QPoly> lift_constant(const Matrix<QuotientElem>& m) {
  return m.map([](const QuotientElem& c) { return QPoly(c); });
}

Matrix<QPoly> shift_all(const Matrix<QPoly>& m, long k) {
  return m.map([k](const QPoly& e) { return e.shift(k); });
}

bool is_perfect_square(const Int& n, Int& root) {
  if (sgn(n) < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

bool congruent_pairing(const IntPoly& F, const IntPoly& expected, long p) {
  return equal_mod_p_up_to_units(F, expected, p) || equal_mod_p_up_to_units(F.negate_t(), expected, p);
}

bool constructive_congruence(const FactorCertificate& c, const IntPoly& alexander_poly, long p) {
  const IntPoly expected = expected_f_mod_p(alexander_poly, p).to_int_symmetric();
  return congruent_pairing(c.q * c.f, expected, p) || congruent_pairing(c.q * c.f.negate_t(), expected, p);
}

}  // namespace

ExtractResult extract_GH(const TwoBridgeFraction& f, long p) {
  require_divides(p, f);
  ExtractResult out;
  const Presentation torus = presentation(TwoBridgeFraction(1, p));
  const Presentation pres = presentation(f);
  const MatrixRep<QuotientElem> rep = xi_rep(torus, p);
  const FreeWord& r0 = torus.relators.front();
  const FreeWord& r = pres.relators.front();
  if (!rep.kills(r)) {
    out.failure = "the K(1/" + std::to_string(p) + ") assignment does not kill the relator of K(" + f.to_string() + ")";
    return out;
  }
  const Matrix<QPoly> a = fox_matrix_image(r, 'x', rep);
  const Matrix<QPoly> b = fox_matrix_image(r0, 'x', rep);
  const QPoly db = det(b);
  Matrix<QPoly> n = a * adjugate(b);
  try {
    n = n.map([&](const QPoly& e) { return exact_div(e, db); });
  } catch (const NonExactDivision&) {
    out.failure = "matrix quotient is not a Laurent polynomial";
    return out;
  }
  const ModulusPtr mod = theta_modulus((p - 1) / 2);
  const Matrix<QPoly> s = lift_constant(rep.inverse('y')) * shift_all(n, -1);
  if (auto form = split_check(s, mod)) {
    out.form = std::move(form);
    out.source = SplitSource::ConjugatedQuotient;
  } else if (auto plain = split_check(n, mod)) {
    out.form = std::move(plain);
    out.source = SplitSource::Quotient;
  } else {
    out.failure = "matrix quotient is not split";
  }
  return out;
}

IntPoly pair_representative(const IntPoly& F) {
  const IntPoly a = canonical(F), b = canonical(F.negate_t());
  return lex_less(b, a) ? b : a;
}

FactorCertificate f_polynomial(const TwoBridgeFraction& fr, long p) {
  const ExtractResult ex = extract_GH(fr, p);
  if (!ex.form) throw NotSplit("K(" + fr.to_string() + "), p = " + std::to_string(p) + ": " + ex.failure);
  FactorCertificate c;
  c.source = *ex.source;
  c.D = dihedral_total(fr, p);
  c.q = split_determinant(torus_gh(p), p);
  c.f = split_determinant(*ex.form, p);
  c.F = canonical(c.q * c.f);
  if (canonical(c.F * c.F.negate_t()) != c.D)
    throw CertificateFailure("f_polynomial: F(t) F(-t) differs from the dihedral total for K(" + fr.to_string() + ")");
  if (pair_representative(c.F) != c.F) {
    c.F = canonical(c.F.negate_t());
    c.q = canonical(c.q.negate_t());
    c.f = canonical(c.f.negate_t());
  }
  return c;
}

std::vector<IntPoly> factor_pairings(const IntPoly& D, std::size_t limit) {
  if (D.is_zero()) return {};
  // F(t) F(-t) is even, so D = E(t^2). Factor E, then split each e(t^2) into
  // phi(t) phi(-t) where possible; the rest is fixed by t -> -t and must
  // come squared.
  const IntPoly low = D.lowered();
  IntPoly E;
  for (long d = 0; d <= low.max_degree(); ++d) {
    if (sgn(low.coeff(d)) == 0) continue;
    if (d % 2 != 0) return {};
    E += IntPoly::monomial(low.coeff(d), d / 2);
  }
  const IntFactorization fac = int_poly_factor(E);
  Int root;
  if (!is_perfect_square(abs(fac.unit), root)) return {};
  IntPoly fixed(root);
  std::vector<std::pair<IntPoly, IntPoly>> pairs;
  std::vector<int> mult;
  for (const auto& [e, m] : fac.factors) {
    if (auto phi = mirror_split(e)) {
      pairs.emplace_back(*phi, phi->negate_t());
      mult.push_back(m);
      continue;
    }
    if (m % 2 != 0) return {};
    IntPoly lifted;
    for (long d = 0; d <= e.max_degree(); ++d) lifted += IntPoly::monomial(e.coeff(d), 2 * d);
    fixed *= pow(lifted, static_cast<unsigned long>(m / 2));
  }
  std::vector<IntPoly> out;
  std::vector<int> a(pairs.size(), 0);
  while (out.size() < limit) {
    IntPoly f = fixed;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      f *= pow(pairs[k].first, static_cast<unsigned long>(mult[k] - a[k])) *
           pow(pairs[k].second, static_cast<unsigned long>(a[k]));
    if (canonical(f * f.negate_t()) != canonical(D)) return {};
    f = pair_representative(f);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    std::size_t k = 0;
    while (k < a.size() && a[k] == mult[k]) a[k++] = 0;
    if (k == a.size()) break;
    ++a[k];
  }
  return out;
}

std::optional<IntPoly> factor_pairing(const IntPoly& D) {
  std::vector<IntPoly> all = factor_pairings(D, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool modp_f_congruence(const IntPoly& D, const IntPoly& alexander_poly, long p, std::size_t limit) {
  const IntPoly expected = expected_f_mod_p(alexander_poly, p).to_int_symmetric();
  for (const IntPoly& f : factor_pairings(D, limit))
    if (congruent_pairing(f, expected, p)) return true;
  return false;
}

bool modp_f_congruence(const TwoBridgeFraction& f, long p, std::size_t limit) {
  const IntPoly delta = alexander(presentation(f));
  try {
    if (constructive_congruence(f_polynomial(f, p), delta, p)) return true;
  } catch (const NotSplit&) {
  }
  return modp_f_congruence(dihedral_total(f, p), delta, p, limit);
}

IntPoly torus_part_prediction(long p) {
  const long n = (p - 1) / 2;
  const IntPoly delta = alexander(presentation(TwoBridgeFraction(1, p)));
  return canonical(pow(int_poly({1, 1}), static_cast<unsigned long>(n)) *
                   pow(delta, static_cast<unsigned long>(n - 1)));
}

ConjectureReport conjecture_report(const TwoBridgeFraction& fr, long p) {
  require_divides(p, fr);
  ConjectureReport r;
  r.D = dihedral_total(fr, p);
  r.q = split_determinant(torus_gh(p), p);
  const IntPoly prediction = torus_part_prediction(p);
  r.torus_prediction = r.q == prediction || canonical(r.q.negate_t()) == prediction;
  try {
    const FactorCertificate c = f_polynomial(fr, p);
    r.split = true;
    r.F = c.F;
    r.q = c.q;
    r.f = c.f;
  } catch (const NotSplit& e) {
    r.failure = e.what();
    r.F = factor_pairing(r.D);
  }
  r.factorization_exists = r.F.has_value();
  r.hp = hp_member(fr, p).has_value() ? "yes" : "inconclusive";
  const IntPoly delta = alexander(presentation(fr));
  r.modp = r.F.has_value() && ((r.split && constructive_congruence(FactorCertificate{r.D, r.q, *r.f, *r.F, {}}, delta, p)) ||
                               modp_f_congruence(r.D, delta, p));
  return r;
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json j;
  j["D"] = poly_to_json(D);
  j["F"] = F ? poly_to_json(*F) : nlohmann::json(nullptr);
  j["q"] = poly_to_json(q);
  j["f"] = f ? poly_to_json(*f) : nlohmann::json(nullptr);
  j["split"] = split;
  j["hp"] = hp;
  j["modp"] = modp;
  j["torus_prediction"] = torus_prediction ? nlohmann::json(*torus_prediction) : nlohmann::json(nullptr);
  return j;
}

}  // namespace talex
