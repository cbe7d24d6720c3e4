#include <numeric>

#include "doctest.h"
#include "talex/appendix.hpp"
#include "talex/golden.hpp"
#include "talex/polytools.hpp"
#include "talex/representations.hpp"

using namespace talex;

namespace {

Matrix<Int> from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix<Int> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  for (long p = 3; p <= bound; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

template <class R>
void check_dihedral_relations(const GenPair<R>& g, long p) {
  const std::size_t d = g.x.rows();
  const auto e = Matrix<R>::identity(d);
  CHECK(g.x * g.x_inv == e);
  CHECK(g.y * g.y_inv == e);
  CHECK(g.x * g.x == e);
  CHECK(g.y * g.y == e);
  CHECK(matrix_power(g.x * g.y, static_cast<unsigned long>(p)) == e);
}

// Direct binomial evaluation of the a_k^{(n)} coefficients, independent of the tables.
Int a_direct(long n, long k) {
  if (n == 0) return k == 0 ? Int(1) : Int(0);
  if (k < 0 || k > n) return 0;
  const long j = n - k;
  return binomial(n + j, 2 * j) + 2 * binomial(n + j, 2 * j + 1);
}

}  // namespace

TEST_CASE("theta polynomials") {
  CHECK(theta(1) == int_poly({3, 1}));
  CHECK(theta(2) == int_poly({5, 5, 1}));
  CHECK(theta(3) == int_poly({7, 14, 7, 1}));
  // Eisenstein shape at p = 2n + 1: monic, lower coefficients divisible by p, constant term exactly p.
  for (long p : primes_up_to(61)) {
    const IntPoly th = theta((p - 1) / 2);
    CHECK(th.leading() == 1);
    CHECK(th.coeff(0) == p);
    for (long k = 0; k < th.max_degree(); ++k) CHECK(th.coeff(k) % p == 0);
  }
}

TEST_CASE("dihedral matrices as printed") {
  const GenPair<Int> pi0 = dihedral_pi0(3);
  CHECK(pi0.x == from_rows({{0, 1}, {1, 0}}));
  CHECK(pi0.y == from_rows({{-1, 0}, {-1, 1}}));
  CHECK(integer_det(pi0.x) == -1);
  const GenPair<QuotientElem> xi = dihedral_xi(3);
  CHECK(xi.y(1, 0) == QuotientElem::constant(theta_modulus(1), Int(-3)));
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    check_dihedral_relations(dihedral_pi(p), p);
    check_dihedral_relations(dihedral_pi0(p), p);
    check_dihedral_relations(dihedral_xi(p), p);
    check_dihedral_relations(dihedral_eta(p), p);
  }
}

TEST_CASE("permutation representation is trivial plus irreducible") {
  // Character check: trace pi(g) = 1 + trace pi0(g) on x, y and xy.
  for (long p : {3L, 5L, 7L, 11L}) {
    const GenPair<Int> a = dihedral_pi(p), b = dihedral_pi0(p);
    auto tr = [](const Matrix<Int>& m) {
      Int s = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
      return s;
    };
    CHECK(tr(a.x) == 1 + tr(b.x));
    CHECK(tr(a.y) == 1 + tr(b.y));
    CHECK(tr(a.x * a.y) == 1 + tr(b.x * b.y));
  }
}

TEST_CASE("xy power table boundary rows") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const XYPowerTable t = xy_power_table(p);
    const ModulusPtr m = theta_modulus((p - 1) / 2);
    const QuotientElem w = QuotientElem::generator(m);
    const QuotientElem one = QuotientElem::constant(m, Int(1));
    CHECK(t.a(1) == one + w);
    CHECK(t.b(1) == one);
    CHECK(t.c(1) == w);
    CHECK(t.d(1) == one);
    CHECK(is_zero(t.a(t.n) + t.b(t.n) + t.b(t.n)));
    CHECK(t.powers.at(static_cast<std::size_t>(p)) == Matrix<QuotientElem>::identity(2));
  }
}

TEST_CASE("U_n matches the printed matrices") {
  CHECK(u_matrix(4) == from_rows(golden::u4()));
  CHECK(u_matrix(5) == from_rows(golden::u5()));
  CHECK(a_jk(3, 3) == 1);
  CHECK(b_jk(3, 3) == 1);
  CHECK(a_jk(3, 2) == 0);
  CHECK(b_jk(4, 1) == 0);
}

TEST_CASE("U_n conjugates pi0 to eta") {
  for (long p : primes_up_to(41)) {
    const long n = (p - 1) / 2;
    const Matrix<Int> u = u_matrix(n);
    const GenPair<Int> a = dihedral_pi0(p), b = dihedral_eta(p);
    CAPTURE(n);
    CHECK(integer_det(u) != 0);
    CHECK(u * a.x == b.x * u);
    CHECK(u * a.y == b.y * u);
  }
}

TEST_CASE("V_n matches the printed matrices and squares to 4E + C_n") {
  const auto printed = golden::v_list();
  for (long n = 1; n <= 5; ++n) CHECK(v_matrix(n) == from_rows(printed[static_cast<std::size_t>(n - 1)]));
  for (long p : primes_up_to(101)) {
    const long n = (p - 1) / 2;
    const Matrix<Int> v = v_matrix(n);
    const auto un = static_cast<std::size_t>(n);
    CAPTURE(n);
    CHECK(v * v == Matrix<Int>::scalar(un, Int(4)) + companion_matrix(theta(n)));
  }
}

TEST_CASE("Catalan series") {
  const long expected[] = {1, -2, 5, -14, 42, -132, 429};
  for (long k = 0; k < 7; ++k) CHECK(catalan_b(k) == expected[k]);
}

TEST_CASE("appendix coefficient identities") {
  for (long n = 0; n <= 30; ++n)
    for (long k = -1; k <= n + 1; ++k) CHECK(a_nk(n, k) == a_direct(n, k));
  // Recursion for a_k^{(n)}.
  for (long n = 2; n <= 30; ++n)
    for (long k = 0; k <= n; ++k) CHECK(a_nk(n, k) == a_nk(n - 1, k) + 2 * a_nk(n - 1, k - 1) - a_nk(n - 2, k - 2));
}

TEST_CASE("F values") {
  CHECK(f_value(0, 0) == 1);
  for (long m = 0; m < 6; ++m) CHECK(f_value(0, m) == catalan_b(m));
  CHECK(f_value(1, 0) == 1);
  CHECK(f_value(1, 1) == -1);
  for (long m = 0; m < 6; ++m) CHECK(f_value(1, m) == 3 * catalan_b(m) + catalan_b(m + 1));
  CHECK(f_value(2, 0) == 0);
  CHECK(f_value(2, 1) == 1);
  CHECK(f_value(2, 2) == -3);
  for (long n = 2; n <= 30; ++n)
    for (long m = 0; m <= 30; ++m) CHECK(f_value(n, m) == f_value(n - 1, m + 1) + 2 * f_value(n - 1, m) - f_value(n - 2, m));
  for (long n = 1; n <= 30; ++n) {
    for (long m = 0; m <= n - 2; ++m) CHECK(f_value(n, m) == 0);
    CHECK(f_value(n, n - 1) == 1);
    CHECK(f_value(n, n) == -(2 * n - 1));
  }
}

TEST_CASE("convolution identity for a_k^{(n-1)}") {
  // sum_{j=0}^{n} a_{k-j}^{(n)} b_j = a_k^{(n-1)} for n >= 2; at n = 1, k = 1 the sum is 1, not 0.
  for (long n = 2; n <= 30; ++n)
    for (long k = 0; k <= n - 1; ++k) {
      Int s = 0;
      for (long j = 0; j <= n; ++j) s += a_nk(n, k - j) * catalan_b(j);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(s == a_nk(n - 1, k));
    }
}

TEST_CASE("alternating binomial identity and H vanishing") {
  for (long big_n = 0; big_n <= 40; ++big_n)
    for (long big_m = 0; big_m <= big_n; ++big_m)
      for (long big_k = 0; big_k <= big_n; ++big_k)
        CHECK(alternating_binomial_sum(big_n, big_k, big_m) == binomial(big_n - big_m, big_k));
  CHECK(h_value(5, 2) == 0);
  for (long n = 1; n <= 20; ++n)
    for (long k = 2; k <= 12; ++k) CHECK(h_value(n, k) == 0);
}

TEST_CASE("binary dihedral images") {
  for (long p : {3L, 5L, 7L}) {
    const GenPair<QuotientElem> g = binary_dihedral(p);
    const auto e = Matrix<QuotientElem>::identity(2);
    CHECK(g.x * g.x == -e);
    CHECK(g.y * g.y == -e);
    CHECK(g.x * g.x_inv == e);
    CHECK(g.y * g.y_inv == e);
    const GenPair<Int> gi = binary_dihedral_integer(p);
    CHECK(gi.x.rows() == static_cast<std::size_t>(2 * (p - 1)));
    CHECK(gi.y * gi.y_inv == Matrix<Int>::identity(gi.y.rows()));
    for (long a = p; a <= 5 * p; a += 2 * p)
      for (long b = 1; b < a; b += 2)
        if (std::gcd(a, b) == 1) {
          const Presentation pres = presentation({b, a});
          CHECK_NOTHROW(assign_with_fallback(pres, g, "XY", "bd", 64));
        }
  }
  const GenPair<QuotientElem> g3 = binary_dihedral(3);
  const ModulusPtr m = g3.y(0, 1).modulus();
  // v^2 = -1 - v in Z[v]/(1 + v + v^2).
  CHECK(g3.y(1, 0) == -QuotientElem(m, {Int(-1), Int(-1)}));
}

TEST_CASE("nqp images") {
  const GenPair<Int> g = nqp_images(4, 3);
  CHECK(g.x.rows() == 24);
  for (const auto* m : {&g.x, &g.y}) {
    for (std::size_t i = 0; i < 24; ++i) {
      Int rs = 0, cs = 0;
      for (std::size_t j = 0; j < 24; ++j) {
        rs += (*m)(i, j);
        cs += (*m)(j, i);
      }
      CHECK(rs == 1);
      CHECK(cs == 1);
    }
  }
  CHECK(matrix_power(g.x, 8) == Matrix<Int>::identity(24));
  CHECK_NOTHROW(build_rep(presentation({1, 3}), nqp_images(1, 3), "XY", "nqp"));
  CHECK_THROWS_AS(nqp_images(3, 3), PreconditionError);
}

TEST_CASE("K-metacyclic permutations") {
  CHECK(cycle_string(sigma_a(7)) == "(1234567)");
  const MatrixRep<Int> rep = kmeta_rep(presentation({1, 3}), 7, -2, "XY");
  CHECK(cycle_string(rep.image('x')) == "(132645)");
  CHECK(cycle_string(rep.image('y')) == "(146527)");
  CHECK(multiplicative_order(-2, 7) == 6);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK_THROWS_AS(kmeta_rep(presentation({1, 3}), 7, 1, "XY"), PreconditionError);
  // Delta of the trefoil does not vanish at 2 mod 7, so no assignment exists.
  CHECK_THROWS_AS(kmeta_rep(presentation({1, 3}), 7, 2, "XY"), NoValidAssignment);
}
