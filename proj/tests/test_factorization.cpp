#include <random>

#include "doctest.h"
#include "talex/factorization.hpp"
#include "talex/golden.hpp"
#include "talex/representations.hpp"
#include "talex/twisted.hpp"

using namespace talex;

namespace {

TwoBridgeFraction frac(const std::string& s) { return parse_fraction(s); }

bool same_pair(const IntPoly& a, const IntPoly& b) { return pair_representative(a) == pair_representative(b); }

QuotientElem random_elem(std::mt19937_64& rng, const ModulusPtr& mod) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<Int> r(mod->degree());
  for (auto& c : r) c = coef(rng);
  return QuotientElem(mod, r);
}

// Random split matrix: G even, H odd, degrees in [-4, 4].
Matrix<QPoly> random_split(std::mt19937_64& rng, const ModulusPtr& mod) {
  SplitForm s{mod, {}, {}};
  for (long d = -4; d <= 4; ++d) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
    (d % 2 == 0 ? s.G : s.H) += QPoly::monomial(random_elem(rng, mod), d);
  }
  return s.reconstruct();
}

Matrix<QPoly> constant(const Matrix<QuotientElem>& m, long degree) {
  return m.map([degree](const QuotientElem& c) { return QPoly::monomial(c, degree); });
}

}  // namespace

TEST_CASE("split_check on the defining examples") {
  const ModulusPtr mod = theta_modulus(2);
  const GenPair<QuotientElem> g = dihedral_xi(5);
  const Matrix<QuotientElem> id = Matrix<QuotientElem>::identity(2);

  const QPoly one_plus_t2 = QPoly(1) + QPoly::monomial(QuotientElem(Int(1)), 2);
  const auto a = split_check(constant(id, 0).map([&](const QPoly& e) { return e * one_plus_t2; }), mod);
  REQUIRE(a.has_value());
  CHECK(a->G == one_plus_t2);
  CHECK(a->H.is_zero());

  const auto b = split_check(constant(g.x + g.y, 1), mod);
  REQUIRE(b.has_value());
  CHECK(b->G.is_zero());
  CHECK(b->H == QPoly::monomial(QuotientElem(Int(1)), 1));

  CHECK_FALSE(split_check(constant(g.x, 1), mod).has_value());
  CHECK_FALSE(split_check(constant(g.x, 0), mod).has_value());
}

TEST_CASE("split forms reconstruct their source and have the right parity") {
  std::mt19937_64 rng(11);
  for (long n : {1L, 2L, 3L}) {
    const ModulusPtr mod = theta_modulus(n);
    for (int i = 0; i < 25; ++i) {
      const Matrix<QPoly> m = random_split(rng, mod);
      const auto s = split_check(m, mod);
      REQUIRE(s.has_value());
      CHECK(s->parity_ok());
      CHECK(s->reconstruct() == m);
    }
  }
}

TEST_CASE("split polynomials are closed under sum and product") {
  std::mt19937_64 rng(12);
  for (long n : {1L, 2L, 3L, 5L}) {
    CAPTURE(n);
    const ModulusPtr mod = theta_modulus(n);
    for (int i = 0; i < 20; ++i) {
      const Matrix<QPoly> a = random_split(rng, mod), b = random_split(rng, mod);
      CHECK(split_check(a + b, mod).has_value());
      CHECK(split_check(a * b, mod).has_value());
      CHECK(split_check(b * a, mod).has_value());
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("(x + y)^2 is the scalar 2 + b_2") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const GenPair<QuotientElem> g = dihedral_xi(p);
    const XYPowerTable table = xy_power_table(p);
    const Matrix<QuotientElem> s = g.x + g.y;
    const QuotientElem c = QuotientElem(Int(2)) + table.b(2);
    CHECK(s * s == Matrix<QuotientElem>::scalar(2, c));
  }
}

TEST_CASE("the four displayed elements are split") {
  for (long p : {3L, 5L, 7L, 11L}) {
    const ModulusPtr mod = theta_modulus((p - 1) / 2);
    for (int which = 1; which <= 4; ++which) {
      CAPTURE(p);
      CAPTURE(which);
      CHECK(split_check(split_element(p, which), mod).has_value());
    }
    // Element (4) is (1 + t^{2p}) times element (1); that needs Q_{4n+1}, since
    // Q_{4n} stops one term short of (1 + t^{2p}) Q_{2n}.
    const long n = (p - 1) / 2;
    const QPoly factor = QPoly(1) + QPoly::monomial(QuotientElem(Int(1)), 2 * p);
    CHECK(split_element(p, 4) == split_element(p, 1).map([&](const QPoly& e) { return e * factor; }));
    CHECK(split_element(p, 4) == q_element(p, 4 * n + 1, false));
    CHECK_FALSE(split_check(q_element(p, 4 * n, false), mod).has_value());
  }
}

TEST_CASE("torus part q(t)") {
  // p = 3: q q(-t) = 1 - t^2 and q = 1 + t up to units and sign of t.
  const IntPoly q3 = split_determinant(torus_gh(3), 3);
  CHECK(same_pair(q3, int_poly({1, 1})));
  CHECK(canonical(q3 * q3.negate_t()) == canonical(int_poly({1, 0, -1})));

  const IntPoly q5 = split_determinant(torus_gh(5), 5);
  CHECK(canonical(q5 * q5.negate_t()) == canonical(golden::dihedral()[3].expected));

  const IntPoly q7 = split_determinant(torus_gh(7), 7);
  CHECK(canonical(q7 * q7.negate_t()) == dihedral_total(TwoBridgeFraction(1, 7), 7));

  for (long p : {3L, 5L, 7L, 11L}) {
    const SplitForm s = torus_gh(p);
    CHECK(s.parity_ok());
  }
}

TEST_CASE("q(t) matches (1 + t)^n Delta^(n-1) for small p") {
  for (long p : {3L, 5L, 7L, 11L}) {
    CAPTURE(p);
    CHECK(same_pair(split_determinant(torus_gh(p), p), torus_part_prediction(p)));
  }
}

TEST_CASE("extract_GH on the torus knot itself") {
  for (long p : {3L, 5L, 7L}) {
    const ExtractResult r = extract_GH(TwoBridgeFraction(1, p), p);
    REQUIRE(r.form.has_value());
    CHECK(r.form->G == QPoly(1));
    CHECK(r.form->H.is_zero());
  }
}

TEST_CASE("factorization certificates reproduce the printed factors") {
  const IntPoly one_plus_t = int_poly({1, 1});
  struct Case {
    const char* knot;
    long p;
    IntPoly torus;
    IntPoly part;
  };
  const IntPoly q5 = pow(one_plus_t, 2) * golden::delta_1_5();
  const std::vector<Case> cases = {
      {"1/3", 3, one_plus_t, IntPoly(1)},
      {"1/9", 3, one_plus_t, int_poly({1, 0, 0, 1, 0, 0, 1})},
      {"5/27", 3, one_plus_t, int_poly({1, 1, -1, 1, 1})},
      {"1/5", 5, q5, IntPoly(1)},
      {"19/85", 5, q5, golden::f_19_85()},
      {"21/115", 5, q5, golden::f_21_115()},
  };
  for (const auto& c : cases) {
    CAPTURE(c.knot);
    const FactorCertificate cert = f_polynomial(frac(c.knot), c.p);
    CHECK(canonical(cert.F * cert.F.negate_t()) == dihedral_total(frac(c.knot), c.p));
    CHECK(cert.F == canonical(cert.q * cert.f));
    CHECK(same_pair(cert.q, c.torus));
    // The two factors are each fixed only up to t -> -t.
    CHECK((same_pair(cert.F, c.torus * c.part) || same_pair(cert.F, c.torus * c.part.negate_t())));
  }
  const FactorCertificate k19 = f_polynomial(frac("19/85"), 5);
  CHECK(same_pair(k19.f, golden::f_19_85()));
  const FactorCertificate k21 = f_polynomial(frac("21/115"), 5);
  CHECK(same_pair(k21.f, golden::f_21_115()));
}

TEST_CASE("knots outside H(p) report instead of failing") {
  const ExtractResult r = extract_GH(frac("2/5"), 5);
  CHECK_FALSE(r.form.has_value());
  CHECK_FALSE(r.failure.empty());
  CHECK_THROWS_AS(f_polynomial(frac("2/5"), 5), NotSplit);
  CHECK_THROWS_AS(extract_GH(frac("1/7"), 5), PreconditionError);
}

TEST_CASE("factor_pairing") {
  const auto a = factor_pairing(int_poly({1, 0, -1}));
  REQUIRE(a.has_value());
  CHECK(same_pair(*a, int_poly({1, 1})));

  const auto b = factor_pairing(golden::dihedral()[1].expected);
  REQUIRE(b.has_value());
  CHECK(canonical(*b * b->negate_t()) == canonical(golden::dihedral()[1].expected));
  // Two mirror pairs give two choices; the printed one is among them.
  const std::vector<IntPoly> all = factor_pairings(golden::dihedral()[1].expected);
  CHECK(all.size() == 2);
  const IntPoly printed = pair_representative(int_poly({1, 1}) * int_poly({1, 0, 0, 1, 0, 0, 1}));
  CHECK(std::find(all.begin(), all.end(), printed) != all.end());

  CHECK_FALSE(factor_pairing(int_poly({1, 1, 1})).has_value());
  CHECK_FALSE(factor_pairing(int_poly({1, 0, 1})).has_value());
  CHECK_FALSE(factor_pairing(int_poly({2, 0, -2})).has_value());
}

TEST_CASE("factor_pairings agree with the constructive factor") {
  for (const auto& item : golden::dihedral()) {
    CAPTURE(item.label);
    const FactorCertificate c = f_polynomial(frac(item.knot), item.p);
    const std::vector<IntPoly> all = factor_pairings(c.D);
    CHECK(std::find(all.begin(), all.end(), c.F) != all.end());
    for (const IntPoly& f : all) CHECK(canonical(f * f.negate_t()) == c.D);
  }
}

TEST_CASE("conjecture report") {
  const ConjectureReport r = conjecture_report(frac("19/85"), 5);
  CHECK(r.split);
  CHECK(r.factorization_exists);
  CHECK(r.hp == "yes");
  CHECK(r.modp);
  REQUIRE(r.torus_prediction.has_value());
  CHECK(*r.torus_prediction);
  const nlohmann::json j = r.to_json();
  for (const char* key : {"D", "F", "q", "f", "split", "hp", "modp", "torus_prediction"}) CHECK(j.contains(key));

  for (long p : {3L, 5L, 7L}) {
    const ConjectureReport t = conjecture_report(TwoBridgeFraction(1, p), p);
    CHECK(t.torus_prediction.value_or(false));
  }

  const ConjectureReport outside = conjecture_report(frac("2/5"), 5);
  CHECK_FALSE(outside.split);
  CHECK(outside.hp == "inconclusive");
  CHECK(outside.factorization_exists);
  CHECK(outside.modp);
  CHECK(outside.to_json()["f"].is_null());
}
