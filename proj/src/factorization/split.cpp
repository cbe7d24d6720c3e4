#include "talex/factorization.hpp"

#include <map>

#include "talex/appendix.hpp"
#include "talex/det.hpp"
#include "talex/errors.hpp"
#include "talex/polytools.hpp"
#include "talex/representations.hpp"
#include "talex/twisted.hpp"

namespace talex {

namespace {

bool has_parity(const QPoly& p, long parity) {
  for (long d = p.min_degree(); d <= p.max_degree(); ++d)
    if (!p.coeff(d).is_zero() && ((d % 2) + 2) % 2 != parity) return false;
  return true;
}

}  // namespace

Matrix<QPoly> SplitForm::reconstruct() const {
  const QPoly w(QuotientElem::generator(modulus));
  const QPoly two(2);
  return Matrix<QPoly>{{G - two * H, H}, {w * H, G + two * H}};
}

bool SplitForm::parity_ok() const { return has_parity(G, 0) && has_parity(H, 1); }

std::optional<SplitForm> split_check(const Matrix<QPoly>& m, const ModulusPtr& modulus) {
  if (m.rows() != 2 || m.cols() != 2) throw PreconditionError("split_check: expected a 2x2 matrix");
  const QuotientElem w = QuotientElem::generator(modulus);
  const QuotientElem two(Int(2));
  long lo = 0, hi = -1;
  bool any = false;
  for (const auto& e : m.data()) {
    if (e.is_zero()) continue;
    lo = any ? std::min(lo, e.min_degree()) : e.min_degree();
    hi = any ? std::max(hi, e.max_degree()) : e.max_degree();
    any = true;
  }
  std::map<long, QuotientElem> g, h;
  for (long d = lo; any && d <= hi; ++d) {
    const QuotientElem m11 = m(0, 0).coeff(d), m12 = m(0, 1).coeff(d);
    const QuotientElem m21 = m(1, 0).coeff(d), m22 = m(1, 1).coeff(d);
    if (d % 2 == 0) {
      if (!m12.is_zero() || !m21.is_zero() || !(m11 == m22)) return std::nullopt;
      if (!m11.is_zero()) g[d] = m11;
    } else {
      // c (X + Y) = [[-2c, c], [w c, 2c]]
      const QuotientElem c = m12;
      if (!(m11 == -(two * c)) || !(m21 == w * c) || !(m22 == two * c)) return std::nullopt;
      if (!c.is_zero()) h[d] = c;
    }
  }
  auto assemble = [](const std::map<long, QuotientElem>& by_degree) {
    QPoly p;
    for (const auto& [d, c] : by_degree) p += QPoly::monomial(c, d);
    return p;
  };
  return SplitForm{modulus, assemble(g), assemble(h)};
}

SplitForm torus_gh(long p) {
  require_odd_prime(p);
  const long n = (p - 1) / 2;
  const XYPowerTable table = xy_power_table(p);
  const ModulusPtr mod = theta_modulus(n);
  const QPoly one_plus_t2 = QPoly(1) + QPoly::monomial(QuotientElem(Int(1)), 2);
  QPoly g, h;
  for (long k = 1; k <= n; ++k) {
    const QPoly b(table.b(k));
    if (k < n) g += b * one_plus_t2 * QPoly::monomial(QuotientElem(Int(1)), 2 * k - 2);
    else g += b * QPoly::monomial(QuotientElem(Int(1)), 2 * n - 2);
    h += b * QPoly::monomial(QuotientElem(Int(1)), 2 * k - 1);
  }
  SplitForm s{mod, g, h};

  const Presentation pres = presentation(TwoBridgeFraction(1, p));
  const QPoly expected = wada(pres, xi_rep(pres, p));
  const QPoly four_plus_w = QPoly(QuotientElem::constant(mod, Int(4)) + QuotientElem::generator(mod));
  if (!equal_up_to_units(g * g - four_plus_w * h * h, expected))
    throw CertificateFailure("torus_gh: g^2 - (4 + w) h^2 differs from the K(1/" + std::to_string(p) +
                             ") Wada invariant");
  return s;
}

Matrix<QPoly> split_element(long p, int which) {
  require_odd_prime(p);
  if (which < 1 || which > 4) throw PreconditionError("split_element: which must be 1..4");
  const long n = (p - 1) / 2;
  const long k = which == 1 ? 2 * n : which == 2 ? n : which == 3 ? 3 * n + 1 : 4 * n + 1;
  return q_element(p, k, which == 2 || which == 3);
}

Matrix<QPoly> q_element(long p, long k, bool tail) {
  require_odd_prime(p);
  if (k < 0) throw PreconditionError("q_element: k must be non-negative");
  const GenPair<QuotientElem> g = dihedral_xi(p);
  auto lift = [](const Matrix<QuotientElem>& m, long degree) {
    return m.map([degree](const QuotientElem& c) { return QPoly::monomial(c, degree); });
  };
  const Matrix<QuotientElem> id = Matrix<QuotientElem>::identity(2);
  const Matrix<QuotientElem> yx = g.y * g.x;

  Matrix<QPoly> q(2, 2);
  Matrix<QuotientElem> power = id;
  for (long j = 0; j <= k; ++j) {
    q += lift(power, 2 * j);
    power = power * yx;
  }
  // power is now (yx)^(k+1).
  Matrix<QPoly> inner = (lift(id, 0) - lift(g.y, 1)) * q * lift(g.y, 1);
  if (tail) inner += lift(power, 2 * k + 2);
  return lift(g.y_inv, -1) * inner * (lift(id, 0) - lift(g.x, 1));
}

IntPoly split_determinant(const SplitForm& s, long p) {
  const long n = (p - 1) / 2;
  const Matrix<Int> c = companion_matrix(theta(n));
  const Matrix<IntPoly> v = constant_poly_matrix(v_matrix(n));
  const Matrix<IntPoly> gg = gamma_substitute(s.G, c);
  const Matrix<IntPoly> gh = gamma_substitute(s.H, c);
  if (!(gg * v == v * gg) || !(gh * v == v * gh))
    throw CertificateFailure("split_determinant: gamma(G) or gamma(H) does not commute with V_n");
  return canonical(bareiss_det(gg - v * gh));
}

}  // namespace talex
