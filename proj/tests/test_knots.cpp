#include <random>

#include <numeric>

#include "doctest.h"
#include "talex/knots.hpp"

using namespace talex;

namespace {

// Direct evaluation of 1/(a1 + 1/(a2 + ...)) with rational arithmetic.
mpq_class oracle(const std::vector<long>& a) {
  mpq_class v(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) v = mpq_class(a[i]) + 1 / v;
  return 1 / v;
}

std::vector<int> floor_signs(long b, long a) {
  std::vector<int> e;
  for (long i = 1; i < a; ++i) e.push_back(((i * b) / a) % 2 == 0 ? 1 : -1);
  return e;
}

TwoBridgeFraction random_fraction(std::mt19937_64& rng, long max_alpha) {
  for (;;) {
    const long a = 2 * std::uniform_int_distribution<long>(1, (max_alpha - 1) / 2)(rng) + 1;
    const long b = std::uniform_int_distribution<long>(1, a - 1)(rng);
    if (std::gcd(a, b) == 1) return {b, a};
  }
}

}  // namespace

TEST_CASE("fraction validation") {
  CHECK(parse_fraction("19/85") == TwoBridgeFraction(19, 85));
  CHECK_THROWS_AS(parse_fraction("2/4"), PreconditionError);
  CHECK_THROWS_AS(parse_fraction("1/4"), PreconditionError);
  CHECK_THROWS_AS(parse_fraction("3/3"), PreconditionError);
  CHECK_THROWS_AS(parse_fraction("abc"), PreconditionError);
}

TEST_CASE("epsilon sequences") {
  CHECK(epsilon_sequence({1, 3}) == std::vector<int>{1, 1});
  CHECK(epsilon_sequence({1, 5}) == std::vector<int>{1, 1, 1, 1});
  for (long a = 3; a < 60; a += 2)
    for (long b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) CHECK(epsilon_sequence({b, a}) == floor_signs(b, a));
}

TEST_CASE("presentations") {
  CHECK(schubert_word({1, 3}) == FreeWord::parse("xy"));
  CHECK(presentation({1, 3}).relators[0] == FreeWord::parse("xyxYXY"));
  CHECK(presentation({1, 5}).relators[0] == FreeWord::parse("xyxyxYXYXY"));
  const Presentation p = preset("8_5");
  CHECK(p.generators == std::vector<char>{'x', 'y', 'z'});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == FreeWord::parse("XYzyxYXYxyxyXYZyxY"));
  CHECK(p.relators[1] == FreeWord::parse("yXYZXyxzyxYZ"));
  CHECK_FALSE(has_preset("9_1"));
  CHECK_THROWS_AS(preset("9_1"), PreconditionError);
}

TEST_CASE("continued fractions") {
  CHECK(cf_eval({{9}}) == mpq_class(1, 9));
  CHECK(cf_eval({{6, -2, 3}}) == mpq_class(5, 27));
  CHECK(cf_eval({{5, -2, 10}}) == mpq_class(19, 85));
  CHECK_THROWS_AS(cf_eval({{1, -1, 0}}), PreconditionError);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> e(1, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<long> a(static_cast<std::size_t>(e(rng) % 5 + 1));
    for (auto& x : a) x = e(rng) * (e(rng) % 2 ? 1 : -1) + (e(rng) > 5 ? 10 : 0);
    try {
      CHECK(cf_eval({a}) == oracle(a));
    } catch (const PreconditionError&) {
    }
  }
}

TEST_CASE("H(p) expansions") {
  CHECK(hp_expansion({1, 9}, 3)->entries == std::vector<long>{9});
  CHECK(hp_expansion({5, 27}, 3)->entries == std::vector<long>{6, -2, 3});
  CHECK(hp_expansion({19, 85}, 5)->entries == std::vector<long>{5, -2, 10});
  // Every returned expansion has the alternating shape and evaluates back.
  for (long p : {3L, 5L}) {
    for (long a = p; a < 120; a += 2 * p)
      for (long b = 1; b < a; ++b) {
        if (std::gcd(a, b) != 1) continue;
        auto c = hp_expansion({b, a}, p);
        if (!c) continue;
        CHECK(cf_eval(*c) == mpq_class(b, a));
        for (std::size_t i = 0; i < c->entries.size(); ++i)
          CHECK(c->entries[i] % (i % 2 == 0 ? p : 2) == 0);
      }
  }
}

TEST_CASE("alexander polynomials") {
  CHECK(alexander(presentation({1, 3})) == int_poly({1, -1, 1}));
  CHECK(alexander(presentation({5, 27})) == int_poly({1, -1, 1}) * int_poly({2, -2, 1, -2, 2}));
  const IntPoly d15 = int_poly({1, -1, 1, -1, 1});
  CHECK(alexander(presentation({19, 85})) == d15 * int_poly({2, -2, 2, -2, 1, -2, 2, -2, 2}));
  CHECK(alexander(preset("8_5")) == int_poly({1, -1, 1}) * int_poly({1, -2, 1, -2, 1}));
}

TEST_CASE("alexander invariants on random fractions") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const TwoBridgeFraction f = random_fraction(rng, 151);
    const IntPoly d = alexander(presentation(f));
    CAPTURE(f.to_string());
    CHECK(abs(eval_lowered(d, Int(1))) == 1);
    CHECK(equal_up_to_units(d, d.reflect()));
    CHECK(abs(eval_lowered(d, Int(-1))) == f.alpha);
  }
}

TEST_CASE("hp_member searches equivalent fractions") {
  const auto w = hp_member(parse_fraction("2/3"), 3);
  REQUIRE(w.has_value());
  CHECK(cf_eval(w->expansion) == w->fraction);
  CHECK_FALSE(hp_expansion(parse_fraction("2/3"), 3).has_value());

  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const long p = std::vector<long>{3, 5, 7}[static_cast<std::size_t>(i % 3)];
    const long a = p * (2 * std::uniform_int_distribution<long>(0, 8)(rng) + 1);
    const long b = std::uniform_int_distribution<long>(1, a - 1)(rng);
    if (a < 3 || std::gcd(a, b) != 1) continue;
    const TwoBridgeFraction f(b, a);
    const auto lit = hp_expansion(f, p);
    const auto eq = hp_member(f, p);
    if (lit) CHECK(eq.has_value());
    if (!eq) continue;
    CHECK(cf_eval(eq->expansion) == eq->fraction);
    // beta' = beta^(+-1) mod alpha
    const Int num = eq->fraction.get_num(), den = eq->fraction.get_den();
    CHECK(den == a);
    const Int bp = ((num % a) + a) % a;
    CHECK(((bp == b) || ((bp * b) % a == 1)));
  }
}
