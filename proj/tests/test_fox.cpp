#include <random>

#include <numeric>

#include "doctest.h"
#include "talex/fox.hpp"
#include "talex/knots.hpp"
#include "talex/matrix_rep.hpp"
#include "talex/representations.hpp"

using namespace talex;

namespace {

FreeWord random_word(std::mt19937_64& rng, const std::string& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i) s += alphabet[pick(rng)];
  return FreeWord::parse(s);
}

GroupRingSum random_sum(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  GroupRingSum s;
  for (int i = 0; i < 3; ++i) s.add(random_word(rng, "xyXY", 4), Int(coef(rng)));
  return s;
}

}  // namespace

TEST_CASE("words are freely reduced") {
  CHECK(FreeWord::parse("xXyY").is_identity());
  CHECK(FreeWord::parse("x^3X^2").to_string() == "x");
  CHECK(FreeWord::parse("y^-2") == FreeWord::parse("YY"));
  CHECK((FreeWord::parse("xy") * FreeWord::parse("YX")).is_identity());
  CHECK(FreeWord::parse("xyz").inverse() == FreeWord::parse("ZYX"));
  CHECK(FreeWord::parse("xy").power(-2) == FreeWord::parse("YXYX"));
  CHECK_THROWS_AS(FreeWord::parse("x1"), PreconditionError);
}

TEST_CASE("fox derivative axioms") {
  const FreeWord x = FreeWord::generator('x');
  CHECK(fox_derivative(x, 'x') == GroupRingSum::one());
  CHECK(fox_derivative(x.inverse(), 'x') == GroupRingSum(x.inverse(), Int(-1)));
  CHECK(fox_derivative(FreeWord::parse("y"), 'x').is_zero());
}

TEST_CASE("trefoil relator derivative") {
  // Hand application of the product rule to x y x Y X Y.
  const FreeWord r = FreeWord::parse("xyxYXY");
  GroupRingSum expected = GroupRingSum::one();
  expected.add(FreeWord::parse("xy"), 1);
  expected.add(FreeWord::parse("xyxYX"), -1);
  const GroupRingSum d = fox_derivative(r, 'x');
  CHECK(d == expected);
  CHECK(psi_evaluate(d) == int_poly({1, -1, 1}));
}

TEST_CASE("abelianization and psi") {
  CHECK(abelianize(FreeWord::parse("xyX")) == 1);
  CHECK(abelianize(FreeWord::parse("xy").power(5)) == 10);
  CHECK(abelianize(FreeWord()) == 0);
  CHECK(psi_evaluate(GroupRingSum()).is_zero());
  GroupRingSum s;
  s.add(FreeWord::parse("x"), 3);
  s.add(FreeWord::parse("y"), -3);
  CHECK(psi_evaluate(s).is_zero());
}

TEST_CASE("fundamental identity on emitted presentations") {
  for (long a = 3; a <= 41; a += 2)
    for (long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Presentation pres = presentation(TwoBridgeFraction(b, a));
      for (const auto& r : pres.relators) CHECK(fundamental_identity_holds(r, pres.generators));
    }
  const Presentation p85 = preset("8_5");
  for (const auto& r : p85.relators) CHECK(fundamental_identity_holds(r, p85.generators));
}

TEST_CASE("fundamental identity on random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) CHECK(fundamental_identity_holds(random_word(rng, "xyzXYZ", 12), {'x', 'y', 'z'}));
}

TEST_CASE("rep_evaluate on xi at p = 3") {
  const GenPair<QuotientElem> g = dihedral_xi(3);
  MatrixRep<QuotientElem> rep("xi");
  rep.assign('x', g.x, g.x_inv);
  rep.assign('y', g.y, g.y_inv);
  const Matrix<QPoly> img = rep_evaluate(GroupRingSum(FreeWord::parse("y")), rep);
  // omega = -3 in Z[w]/(w + 3).
  const ModulusPtr m = theta_modulus(1);
  CHECK(img(0, 0) == QPoly::monomial(QuotientElem::constant(m, Int(-1)), 1));
  CHECK(img(0, 1).is_zero());
  CHECK(img(1, 0) == QPoly::monomial(QuotientElem::constant(m, Int(-3)), 1));
  CHECK(img(1, 1) == QPoly::monomial(QuotientElem::constant(m, Int(1)), 1));
  CHECK(rep_evaluate(GroupRingSum::one(), rep) == Matrix<QPoly>::identity(2));
}

TEST_CASE("rep_evaluate is multiplicative") {
  const GenPair<Int> g = dihedral_pi0(5);
  MatrixRep<Int> rep("pi0");
  rep.assign('x', g.x, g.x_inv);
  rep.assign('y', g.y, g.y_inv);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const GroupRingSum a = random_sum(rng), b = random_sum(rng);
    CHECK(rep_evaluate(a * b, rep) == rep_evaluate(a, rep) * rep_evaluate(b, rep));
  }
}

TEST_CASE("fox_matrix_image agrees with rep_evaluate of the derivative") {
  const GenPair<Int> g = dihedral_pi0(5);
  MatrixRep<Int> rep("pi0");
  rep.assign('x', g.x, g.x_inv);
  rep.assign('y', g.y, g.y_inv);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const FreeWord w = random_word(rng, "xyXY", 16);
    for (char gen : {'x', 'y'}) CHECK(fox_matrix_image(w, gen, rep) == rep_evaluate(fox_derivative(w, gen), rep));
  }
}

TEST_CASE("alexander symmetry of the standard relator") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> alpha(1, 60);
  int done = 0;
  while (done < 50) {
    const long a = 2 * alpha(rng) + 1;
    const long b = std::uniform_int_distribution<long>(1, a - 1)(rng);
    if (std::gcd(a, b) != 1) continue;
    const Presentation pres = presentation(TwoBridgeFraction(b, a));
    const IntPoly d = psi_evaluate(fox_derivative(pres.relators[0], 'x'));
    CHECK(equal_up_to_units(d, d.reflect()));
    ++done;
  }
}
