#include <random>

#include "doctest.h"
#include "talex/det.hpp"
#include "talex/json_io.hpp"
#include "talex/poly_factor.hpp"
#include "talex/polytools.hpp"
#include "talex/quotient.hpp"

using namespace talex;

namespace {

IntPoly random_poly(std::mt19937_64& rng, long max_deg, long max_coeff, bool laurent = false) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
  std::uniform_int_distribution<long> lo(-3, 3);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return IntPoly(laurent ? lo(rng) : 0, std::move(c));
}

// Complex evaluation oracle for small products over roots of unity.
std::vector<long> expand_over_i(const std::vector<long>& p) {
  // (sum p_k (i t)^k)(sum p_k (-i t)^k), coefficients real integers.
  std::vector<long> re(2 * p.size() - 1, 0);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      // i^a (-i)^b = i^(a+b) (-1)^b
      long e = static_cast<long>((a + b) % 4);
      long s = (b % 2 ? -1 : 1);
      if (e == 0) re[a + b] += s * p[a] * p[b];
      else if (e == 2) re[a + b] -= s * p[a] * p[b];
    }
  return re;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  IntPoly a = int_poly({1, 1});
  IntPoly b = int_poly({1, -1});
  CHECK(a * b == int_poly({1, 0, -1}));
  CHECK(int_poly({1, 1, -1, 1, 1}).negate_t() == int_poly({1, -1, -1, -1, 1}));
  CHECK(a + IntPoly() == a);
  CHECK((a - a).is_zero());
  CHECK((a - a).min_degree() == 0);
  IntPoly lp = IntPoly::monomial(Int(3), -2) + IntPoly::monomial(Int(-1), 1);
  CHECK(lp.min_degree() == -2);
  CHECK(lp.max_degree() == 1);
  CHECK(lp.reflect().min_degree() == -1);
  CHECK(to_string(int_poly({1, -1, 1})) == "1 - t + t^2");
  CHECK(to_string(int_poly({0, -2, 0, 3})) == "-2*t + 3*t^3");
}

TEST_CASE("exact division") {
  CHECK(exact_div(int_poly({1, 0, 0, 0, -1}), int_poly({1, 0, -1})) == int_poly({1, 0, 1}));
  CHECK(exact_div(int_poly({1, 0, 0, 0, 0, 0, -1}), int_poly({1, -1}) * int_poly({1, 1})) == int_poly({1, 0, 1, 0, 1}));
  IntPoly tri = int_poly({1, -1, 1});
  CHECK(exact_div(tri * int_poly({1, 1}), int_poly({1, 1})) == tri);
  CHECK_THROWS_AS(exact_div(int_poly({1, 0, 1}), int_poly({1, 1})), NonExactDivision);
  CHECK_THROWS_AS(exact_div(int_poly({1, 1}), IntPoly()), PreconditionError);
}

TEST_CASE("exact division property: (a*b)/b == a") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    IntPoly a = random_poly(rng, 40, 1000000, true);
    IntPoly b = random_poly(rng, 40, 1000000, true);
    if (b.is_zero()) continue;
    REQUIRE(exact_div(a * b, b) == a);
  }
}

TEST_CASE("canonical normalization") {
  IntPoly p = int_poly({-2, 1}, 3);
  CHECK(canonical(p) == int_poly({2, -1}));
  CHECK(equal_up_to_units(p, int_poly({2, -1}, -5)));
  CHECK(canonical(IntPoly()).is_zero());
}

TEST_CASE("companion matrices") {
  CHECK(companion_matrix(int_poly({3, 1})) == Matrix<Int>{{-3}});
  Matrix<Int> c2 = companion_matrix(int_poly({5, 5, 1}));
  CHECK(c2 == Matrix<Int>{{0, -5}, {1, -5}});
  // theta_2(C) = C^2 + 5C + 5 = 0 by direct arithmetic.
  Matrix<Int> z = c2 * c2 + c2.scaled(Int(5)) + Matrix<Int>::scalar(2, Int(5));
  CHECK(z == Matrix<Int>(2, 2));
  Matrix<Int> ci = companion_matrix(int_poly({1, 0, 1}));
  CHECK(ci == Matrix<Int>{{0, -1}, {1, 0}});
  CHECK(ci * ci == Matrix<Int>::scalar(2, Int(-1)));
  CHECK_THROWS_AS(companion_matrix(int_poly({1, 2})), PreconditionError);
}

TEST_CASE("quotient ring arithmetic") {
  auto m = make_modulus(int_poly({5, 5, 1}));
  QuotientElem w = QuotientElem::generator(m);
  QuotientElem w2 = w * w;
  CHECK(w2 == QuotientElem(m, {Int(-5), Int(-5)}));
  QuotientElem u = QuotientElem(4L) + w;
  auto q = divide_exact(u * w2, u);
  REQUIRE(q);
  CHECK(*q == w2);
  // 4 + w is a unit for theta_2 (norm 1).
  auto inv = divide_exact(QuotientElem(1L), u);
  REQUIRE(inv);
  CHECK(*inv * u == QuotientElem(m, {Int(1)}));
  CHECK(!divide_exact(QuotientElem(1L), QuotientElem(m, {Int(2)})));
  auto other = make_modulus(int_poly({1, 1, 1}));
  CHECK_THROWS_AS(w + QuotientElem::generator(other), RingMismatch);
}

TEST_CASE("gamma substitution") {
  auto m1 = make_modulus(int_poly({3, 1}));
  QPoly p = QPoly(QuotientElem(4L) + QuotientElem::generator(m1));
  Matrix<IntPoly> g = gamma_substitute(p, companion_matrix(m1->as_poly()));
  CHECK(g == Matrix<IntPoly>{{IntPoly(1)}});
  auto m2 = make_modulus(int_poly({5, 5, 1}));
  Matrix<Int> c2 = companion_matrix(m2->as_poly());
  CHECK(gamma_substitute(QPoly(QuotientElem(1L)), c2) == constant_poly_matrix(Matrix<Int>::identity(2)));
  QPoly wt = QPoly::monomial(QuotientElem::generator(m2), 1);
  IntPoly t = IntPoly::t();
  CHECK(gamma_substitute(wt, c2) == Matrix<IntPoly>{{IntPoly(), t.scaled(Int(-5))}, {t, t.scaled(Int(-5))}});
}

TEST_CASE("determinants") {
  IntPoly t = IntPoly::t();
  CHECK(bareiss_det(Matrix<IntPoly>{{IntPoly(1), t}, {t, IntPoly(1)}}) == int_poly({1, 0, -1}));
  CHECK(integer_det(Matrix<Int>{{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_det(Matrix<IntPoly>{{IntPoly(1), IntPoly(1)}, {IntPoly(1), IntPoly(1)}}).is_zero());
  CHECK(integer_det(Matrix<Int>{{2, 0, 0, 0}, {0, 0, 3, 0}, {0, 5, 0, 0}, {0, 0, 0, 7}}) == -210);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    Matrix<IntPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, 4, 9, true);
    REQUIRE(bareiss_det(m) == cofactor_det(m));
  }
}

TEST_CASE("cyclic products") {
  CHECK(cyclic_product(int_poly({1, -1}), int_poly({-1, 0, 1})) == int_poly({1, 0, -1}));
  std::vector<long> brute = expand_over_i({1, 1, 1});
  std::vector<Int> bc(brute.begin(), brute.end());
  CHECK(cyclic_product(int_poly({1, 1, 1}), int_poly({1, 0, 1})) == IntPoly(0, bc));
  CHECK(cyclic_product(IntPoly(7), cyclotomic_poly(5)) == IntPoly(7 * 7 * 7 * 7));
  CHECK(cyclic_product(int_poly({1, -1}), x_pow_minus_one(3)) == int_poly({1, 0, 0, -1}));
}

TEST_CASE("cyclic product over z^m - 1 matches the symbolic product for m <= 4") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> c(1 + static_cast<std::size_t>(trial % 5));
    std::uniform_int_distribution<long> coef(-9, 9);
    for (auto& x : c) x = coef(rng);
    std::vector<Int> ci(c.begin(), c.end());
    IntPoly p(0, ci);
    if (p.is_zero()) continue;
    std::vector<long> oi = expand_over_i(c);
    IntPoly over_i(0, std::vector<Int>(oi.begin(), oi.end()));
    REQUIRE(cyclic_product(p, x_pow_minus_one(1)) == p);
    REQUIRE(cyclic_product(p, x_pow_minus_one(2)) == p * p.negate_t());
    REQUIRE(cyclic_product(p, x_pow_minus_one(4)) == p * p.negate_t() * over_i);
    REQUIRE(cyclic_product(p, int_poly({1, 0, 1})) == over_i);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == int_poly({-1, 1}));
  CHECK(cyclotomic_poly(4) == int_poly({1, 0, 1}));
  CHECK(cyclotomic_poly(10) == int_poly({1, -1, 1, -1, 1}));
  // Product over divisors reproduces z^m - 1.
  for (long m = 1; m <= 30; ++m) {
    IntPoly prod(1);
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * cyclotomic_poly(d);
    REQUIRE(prod == x_pow_minus_one(m));
  }
}

TEST_CASE("theta_n(C_n) = 0 for small primes") {
  for (long n = 1; n <= 30; ++n) {
    if (!is_prime(2 * n + 1)) continue;
    std::vector<Int> c;
    for (long k = 0; k <= n; ++k) c.push_back(binomial(n + k, 2 * k) + 2 * binomial(n + k, 2 * k + 1));
    IntPoly th(0, c);
    REQUIRE(evaluate_at(th, companion_matrix(th)) == Matrix<Int>(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
  }
}

TEST_CASE("integer factorization") {
  auto f1 = int_poly_factor(int_poly({1, 0, -1}));
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.expand() == int_poly({1, 0, -1}));
  IntPoly a = int_poly({1, 0, 0, -1, 0, 0, 1});
  IntPoly b = int_poly({1, 0, 0, 1, 0, 0, 1});
  auto f2 = int_poly_factor(a * b);
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].first.max_degree() == 6);
  CHECK(f2.factors[1].first.max_degree() == 6);
  auto f3 = int_poly_factor(int_poly({1, -1, 1}));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].first == int_poly({1, -1, 1}));
}

TEST_CASE("factorization property: expand reproduces and factors are irreducible") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    IntPoly p(1);
    int k = 1 + trial % 4;
    for (int i = 0; i < k; ++i) {
      IntPoly q = random_poly(rng, 5, 6);
      if (q.is_zero()) q = int_poly({1, 1});
      p = p * q;
    }
    p = p.scaled(Int(1 + trial % 3));
    auto fac = int_poly_factor(p);
    REQUIRE(fac.expand() == p);
    for (const auto& [g, e] : fac.factors) {
      auto again = int_poly_factor(g);
      REQUIRE(again.factors.size() == 1);
      REQUIRE(again.factors[0].second == 1);
    }
  }
}

TEST_CASE("polynomial json round trip") {
  IntPoly p = IntPoly::monomial(Int("123456789012345678901234567890"), -3) + int_poly({1, -2});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(int_poly({1, -1})).dump() == R"({"coeffs":["1","-1"],"min_deg":0})");
}
