#include <random>
#include <sstream>

#include "talex/appendix.hpp"
#include "talex/det.hpp"
#include "talex/factorization.hpp"
#include "talex/golden.hpp"
#include "talex/modp.hpp"
#include "talex/polytools.hpp"
#include "talex/representations.hpp"
#include "talex/twisted.hpp"
#include "talex/verify.hpp"

namespace talex::verify {

namespace {

// Collects the first few failing conditions of a check.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failed_++ < 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  Outcome outcome() const {
    if (failed_ == 0) return {true, std::to_string(checked_) + " checks"};
    return {false, std::to_string(failed_) + " of " + std::to_string(checked_) + " failed: " + detail_};
  }

 private:
  long checked_ = 0;
  long failed_ = 0;
  std::string detail_;
};

std::string at(const char* what, long k) { return std::string(what) + " at k=" + std::to_string(k); }

Matrix<Int> from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix<Int> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<long> odd_primes_up_to(long bound) {
  std::vector<long> out;
  for (long p = 3; p <= bound; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

using QMat = Matrix<QuotientElem>;

Outcome initial_values(long p) {
  const XYPowerTable t = xy_power_table(p);
  const QuotientElem w = QuotientElem::generator(theta_modulus(t.n));
  const QuotientElem one(1), zero(0);
  Tally c;
  c.expect(t.a(0) == one && t.d(0) == one, "a0 = d0 = 1");
  c.expect(t.b(0) == zero && t.c(0) == zero, "b0 = c0 = 0");
  c.expect(t.a(1) == one + w, "a1 = 1 + w");
  c.expect(t.b(1) == one && t.d(1) == one, "b1 = d1 = 1");
  c.expect(t.c(1) == w, "c1 = w");
  return c.outcome();
}

Outcome recurrences(long p) {
  const XYPowerTable t = xy_power_table(p);
  const QuotientElem w = QuotientElem::generator(theta_modulus(t.n));
  const QuotientElem one(1), two(2);
  Tally c;
  for (long k = 2; k <= p; ++k) {
    c.expect(t.a(k) == (two + w) * t.a(k - 1) - t.a(k - 2), at("a_k three-term recurrence", k));
    c.expect(w * t.b(k) == (one + w) * t.a(k - 1) - t.a(k - 2), at("w b_k from a", k));
  }
  QuotientElem partial(0);
  for (long k = 1; k <= p; ++k) {
    partial = partial + t.a(k - 1);
    c.expect(w * t.b(k) == t.a(k) - t.a(k - 1), at("w b_k = a_k - a_(k-1)", k));
    c.expect(w * t.b(k) == t.c(k), at("c_k = w b_k", k));
    c.expect(t.a(k) == w * t.b(k) + t.d(k), at("a_k = w b_k + d_k", k));
    c.expect(t.d(k) == t.a(k - 1), at("d_k = a_(k-1)", k));
    c.expect(t.b(k) == t.b(k - 1) + t.a(k - 1), at("b_k = b_(k-1) + a_(k-1)", k));
    c.expect(t.c(k) + t.d(k) == t.a(k), at("c_k + d_k = a_k", k));
    c.expect(partial == t.b(k), at("partial sums of a", k));
  }
  return c.outcome();
}

Outcome symmetry(long p) {
  const XYPowerTable t = xy_power_table(p);
  const long n = t.n;
  Tally c;
  for (long k = 0; k <= 2 * n; ++k) {
    c.expect(t.a(k) == t.a(2 * n - k), at("a_k = a_(2n-k)", k));
    c.expect(t.b(k) == -t.b(p - k), at("b_k = -b_(p-k)", k));
  }
  c.expect(t.a(p) == t.a(0), "a_p = a_0");
  c.expect(t.b(p).is_zero(), "b_p = 0");
  c.expect(t.powers.at(static_cast<std::size_t>(p)) == QMat::identity(2), "(XY)^p = 1");
  return c.outcome();
}

Outcome period_sums(long p) {
  const XYPowerTable t = xy_power_table(p);
  const long n = t.n;
  QuotientElem sa(0), sb(0), sd(0);
  for (long k = 0; k <= 2 * n; ++k) {
    sa = sa + t.a(k);
    if (k >= 1) sb = sb + t.b(k);
    sd = sd + t.d(k);
  }
  Tally c;
  c.expect(sa.is_zero(), "sum a_k = 0");
  c.expect(sb.is_zero(), "sum b_k = 0");
  c.expect(sd.is_zero(), "sum d_k = 0");
  c.expect((t.a(n) + QuotientElem(2) * t.b(n)).is_zero(), "a_n + 2 b_n = 0");
  return c.outcome();
}

Outcome algebra_relations(long p) {
  const XYPowerTable t = xy_power_table(p);
  const GenPair<QuotientElem> g = dihedral_xi(p);
  const long n = t.n;
  const QMat sum = g.x + g.y;
  auto scal = [](const QuotientElem& c) { return QMat::scalar(2, c); };
  Tally c;
  QMat yx = QMat::identity(2);
  for (long k = 1; k <= n; ++k) {
    yx = yx * g.y * g.x;
    const QMat& xy = t.powers.at(static_cast<std::size_t>(k));
    c.expect(xy + yx == scal(t.a(k - 1) + t.a(k)), at("(xy)^k + (yx)^k", k));
    if (k <= n - 1) c.expect(xy * g.x + g.y * xy == scal(t.a(k)) * sum, at("(xy)^k x + y (xy)^k", k));
  }
  const QMat& xyn = t.powers.at(static_cast<std::size_t>(n));
  c.expect(xyn * g.x == g.y * xyn, "(xy)^n x = y (xy)^n");
  c.expect(scal(QuotientElem(2)) * (xyn * g.x) == scal(t.a(n)) * sum, "2 (xy)^n x = a_n (x + y)");
  c.expect(xyn * g.x == scal(-t.b(n)) * sum, "(xy)^n x = -b_n (x + y)");
  c.expect(sum * sum == scal(QuotientElem(2) + t.b(2)), "(x + y)^2 = 2 + b_2");
  return c.outcome();
}

std::string label(const std::string& what, long p) { return what + " p=" + std::to_string(p); }

}  // namespace

std::vector<Item> sequence_items(const std::vector<long>& primes) {
  std::vector<Item> out;
  for (long p : primes) {
    out.push_back({label("(XY)^k initial values", p), [p] { return initial_values(p); }});
    out.push_back({label("(XY)^k recurrences", p), [p] { return recurrences(p); }});
    out.push_back({label("(XY)^k symmetry", p), [p] { return symmetry(p); }});
    out.push_back({label("(XY)^k period sums", p), [p] { return period_sums(p); }});
    out.push_back({label("dihedral algebra relations", p), [p] { return algebra_relations(p); }});
  }
  return out;
}

std::vector<Item> split_element_items(const std::vector<long>& primes) {
  std::vector<Item> out;
  for (long p : primes) {
    out.push_back({label("split elements", p), [p] {
                     const ModulusPtr mod = theta_modulus((p - 1) / 2);
                     Tally c;
                     for (int which = 1; which <= 4; ++which) {
                       const auto s = split_check(split_element(p, which), mod);
                       c.expect(s.has_value(), "element " + std::to_string(which) + " is split");
                       if (s) c.expect(s->parity_ok(), "element " + std::to_string(which) + " parity");
                     }
                     return c.outcome();
                   }});
  }
  return out;
}

std::vector<Item> torus_part_items(const std::vector<long>& asserted, const std::vector<long>& reported) {
  std::vector<Item> out;
  auto make = [](long p, bool report) {
    return Item{label("torus part q(t) = (1+t)^n Delta^(n-1)", p),
                [p] {
                  const IntPoly q = split_determinant(torus_gh(p), p);
                  const IntPoly expected = torus_part_prediction(p);
                  const bool ok = pair_representative(q) == pair_representative(expected);
                  return Outcome{ok, "deg q = " + std::to_string(q.max_degree() - q.min_degree())};
                },
                report};
  };
  for (long p : asserted) out.push_back(make(p, false));
  for (long p : reported) out.push_back(make(p, true));
  return out;
}

std::vector<Item> appendix_items(long u_bound, long v_bound) {
  std::vector<Item> out;
  out.push_back({"U_4, U_5 match the printed matrices", [] {
                   Tally c;
                   c.expect(u_matrix(4) == from_rows(golden::u4()), "U_4");
                   c.expect(u_matrix(5) == from_rows(golden::u5()), "U_5");
                   return c.outcome();
                 }});
  out.push_back({"V_1..V_5 match the printed matrices", [] {
                   const auto printed = golden::v_list();
                   Tally c;
                   for (long n = 1; n <= 5; ++n)
                     c.expect(v_matrix(n) == from_rows(printed[static_cast<std::size_t>(n - 1)]),
                              "V_" + std::to_string(n));
                   return c.outcome();
                 }});
  for (long p : odd_primes_up_to(u_bound)) {
    const long n = (p - 1) / 2;
    out.push_back({"U_n conjugates pi0 to eta n=" + std::to_string(n), [n, p] {
                     const Matrix<Int> u = u_matrix(n);
                     const GenPair<Int> a = dihedral_pi0(p), b = dihedral_eta(p);
                     Tally c;
                     c.expect(integer_det(u) != 0, "U_n invertible");
                     c.expect(u * a.x == b.x * u, "U pi0(x) = eta(x) U");
                     c.expect(u * a.y == b.y * u, "U pi0(y) = eta(y) U");
                     return c.outcome();
                   }});
  }
  for (long p : odd_primes_up_to(v_bound)) {
    const long n = (p - 1) / 2;
    out.push_back({"V_n^2 = 4E + C_n n=" + std::to_string(n), [n] {
                     const Matrix<Int> v = v_matrix(n);
                     const bool ok = v * v == Matrix<Int>::scalar(static_cast<std::size_t>(n), Int(4)) +
                                                  companion_matrix(theta(n));
                     return Outcome{ok, ok ? "" : "square differs"};
                   }});
  }
  out.push_back({"alternating Catalan series", [] {
                   const long expected[] = {1, -2, 5, -14, 42, -132, 429, -1430};
                   Tally c;
                   for (long k = 0; k < 8; ++k) c.expect(catalan_b(k) == expected[k], at("b_k", k));
                   return c.outcome();
                 }});
  out.push_back({"a_k^(n) recursion, n <= 30", [] {
                   Tally c;
                   for (long n = 2; n <= 30; ++n)
                     for (long k = 0; k <= n; ++k)
                       c.expect(a_nk(n, k) == a_nk(n - 1, k) + 2 * a_nk(n - 1, k - 1) - a_nk(n - 2, k - 2),
                                "n=" + std::to_string(n) + " k=" + std::to_string(k));
                   return c.outcome();
                 }});
  out.push_back({"F(n, m) worked values", [] {
                   Tally c;
                   c.expect(f_value(1, 0) == 1, "F(1,0) = 1");
                   c.expect(f_value(2, 2) == -3, "F(2,2) = -3");
                   for (long m = 0; m < 8; ++m) c.expect(f_value(0, m) == catalan_b(m), at("F(0,m) = b_m", m));
                   return c.outcome();
                 }});
  out.push_back({"F(n, m) recursion and values, n <= 30", [] {
                   Tally c;
                   for (long n = 2; n <= 30; ++n)
                     for (long m = 0; m <= 30; ++m)
                       c.expect(f_value(n, m) == f_value(n - 1, m + 1) + 2 * f_value(n - 1, m) - f_value(n - 2, m),
                                "recursion n=" + std::to_string(n) + " m=" + std::to_string(m));
                   for (long n = 1; n <= 30; ++n) {
                     for (long m = 0; m <= n - 2; ++m) c.expect(f_value(n, m) == 0, "F(n,m) = 0 below n-1");
                     c.expect(f_value(n, n - 1) == 1, "F(n,n-1) = 1 at n=" + std::to_string(n));
                     c.expect(f_value(n, n) == -(2 * n - 1), "F(n,n) = -(2n-1) at n=" + std::to_string(n));
                   }
                   return c.outcome();
                 }});
  out.push_back({"alternating binomial identity, N <= 40", [] {
                   Tally c;
                   for (long big_n = 0; big_n <= 40; ++big_n)
                     for (long big_m = 0; big_m <= big_n; ++big_m)
                       for (long big_k = 0; big_k <= big_n; ++big_k)
                         c.expect(alternating_binomial_sum(big_n, big_k, big_m) == binomial(big_n - big_m, big_k),
                                  "N=" + std::to_string(big_n) + " K=" + std::to_string(big_k) +
                                      " M=" + std::to_string(big_m));
                   return c.outcome();
                 }});
  out.push_back({"H_k^(n) = 0, n <= 20, k <= 12", [] {
                   Tally c;
                   for (long n = 1; n <= 20; ++n)
                     for (long k = 2; k <= 12; ++k)
                       c.expect(h_value(n, k) == 0, "n=" + std::to_string(n) + " k=" + std::to_string(k));
                   return c.outcome();
                 }});
  return out;
}

std::vector<Item> structural_items(std::uint64_t seed, int triangular_samples) {
  std::vector<Item> out;
  out.push_back({"Fox fundamental identity on emitted presentations", [seed] {
                   Tally c;
                   std::vector<Presentation> all = {preset("8_5")};
                   for (const char* s : {"1/3", "1/9", "5/27", "1/5", "19/85", "21/115", "5/9", "7/17"})
                     all.push_back(presentation(parse_fraction(s)));
                   for (const auto& [f, p] : sample_fractions(seed, 20, {3, 5, 7}, 200)) {
                     (void)p;
                     all.push_back(presentation(f));
                   }
                   for (const auto& pres : all)
                     for (const auto& r : pres.relators)
                       c.expect(fundamental_identity_holds(r, pres.generators), pres.name);
                   return c.outcome();
                 }});
  out.push_back({"Wada invariant ignores the omitted generator on 8_5", [] {
                   const Presentation pres = preset("8_5");
                   const MatrixRep<Int> r1 = build_rep(pres, dihedral_pi(3), "XYX", "pi");
                   const MatrixRep<Int> r5 = kmeta_rep(pres, 7, -2, "XYX");
                   Tally c;
                   for (const auto* rep : {&r1, &r5}) {
                     const IntPoly first = wada(pres, *rep, nullptr, 'x');
                     for (char g : {'y', 'z'})
                       c.expect(wada(pres, *rep, nullptr, g) == first, rep->name() + " omitting " + g);
                   }
                   return c.outcome();
                 }});
  out.push_back({"det(xi(y) t - I) = (1 - t)(1 + t)", [] {
                   Tally c;
                   for (long p : odd_primes_up_to(31)) {
                     MatrixRep<QuotientElem> rep("xi");
                     const GenPair<QuotientElem> g = dihedral_xi(p);
                     rep.assign('y', g.y, g.y_inv);
                     c.expect(to_int_poly(det(generator_minus_identity('y', rep))) == int_poly({1, 0, -1}),
                              "p=" + std::to_string(p));
                   }
                   return c.outcome();
                 }});
  for (const auto& [f, p] : sample_fractions(seed + 1, triangular_samples, {3, 5, 7}, 200)) {
    out.push_back({"mod-p triangular structure " + f.to_string() + " p=" + std::to_string(p), [f = f, p = p] {
                     const TriangularReport r = modp_triangular_structure(f, p);
                     Tally c;
                     c.expect(r.lower_triangular, "lower triangular");
                     c.expect(r.diagonals_match, "diagonal blocks");
                     return c.outcome();
                   }});
  }
  return out;
}

}  // namespace talex::verify
