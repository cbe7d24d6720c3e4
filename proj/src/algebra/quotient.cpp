#include "talex/quotient.hpp"

#include <gmpxx.h>

namespace talex {

IntPoly Modulus::as_poly() const {
  std::vector<Int> c = low;
  c.emplace_back(1);
  return IntPoly(0, std::move(c));
}

ModulusPtr make_modulus(const IntPoly& monic, std::string name) {
  if (monic.is_zero() || monic.min_degree() != 0 || monic.max_degree() < 1)
    throw PreconditionError("modulus must be a polynomial of degree >= 1 with nonzero constant range");
  if (monic.leading() != 1) throw PreconditionError("modulus must be monic");
  auto m = std::make_shared<Modulus>();
  for (long d = 0; d < monic.max_degree(); ++d) m->low.push_back(monic.coeff(d));
  m->name = std::move(name);
  return m;
}

namespace {

const ModulusPtr& common(const QuotientElem& a, const QuotientElem& b) {
  const auto& ma = a.modulus();
  const auto& mb = b.modulus();
  if (!ma) return mb;
  if (!mb || ma == mb || *ma == *mb) return ma;
  throw RingMismatch("quotient elements over different moduli");
}

}  // namespace

QuotientElem::QuotientElem(ModulusPtr m, std::vector<Int> residue)
    : modulus_(std::move(m)), residue_(std::move(residue)) {
  reduce();
}

QuotientElem QuotientElem::generator(const ModulusPtr& m) {
  if (m->degree() == 1) return QuotientElem(m, {-m->low[0]});
  return QuotientElem(m, {Int(0), Int(1)});
}

QuotientElem QuotientElem::constant(const ModulusPtr& m, const Int& c) { return QuotientElem(m, {c}); }

void QuotientElem::trim() {
  while (!residue_.empty() && sgn(residue_.back()) == 0) residue_.pop_back();
}

void QuotientElem::reduce() {
  trim();
  if (!modulus_) {
    if (residue_.size() > 1) throw PreconditionError("polynomial residue requires a modulus");
    return;
  }
  const std::size_t d = modulus_->degree();
  while (residue_.size() > d) {
    Int top = residue_.back();
    residue_.pop_back();
    const std::size_t base = residue_.size() - d;
    for (std::size_t i = 0; i < d; ++i) residue_[base + i] -= top * modulus_->low[i];
    trim();
  }
}

QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
  const ModulusPtr& m = common(a, b);
  std::vector<Int> r(std::max(a.residue_.size(), b.residue_.size()));
  for (std::size_t i = 0; i < a.residue_.size(); ++i) r[i] += a.residue_[i];
  for (std::size_t i = 0; i < b.residue_.size(); ++i) r[i] += b.residue_[i];
  return QuotientElem(m, std::move(r));
}

QuotientElem QuotientElem::operator-() const {
  QuotientElem r = *this;
  for (auto& c : r.residue_) c = -c;
  return r;
}

QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) { return a + (-b); }

QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
  const ModulusPtr& m = common(a, b);
  if (a.residue_.empty() || b.residue_.empty()) return QuotientElem(m, {});
  std::vector<Int> r(a.residue_.size() + b.residue_.size() - 1);
  for (std::size_t i = 0; i < a.residue_.size(); ++i)
    for (std::size_t j = 0; j < b.residue_.size(); ++j) r[i + j] += a.residue_[i] * b.residue_[j];
  return QuotientElem(m, std::move(r));
}

bool operator==(const QuotientElem& a, const QuotientElem& b) {
  if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_ && !(*a.modulus_ == *b.modulus_)) return false;
  return a.residue_ == b.residue_;
}

Matrix<Int> QuotientElem::substitute(const Matrix<Int>& c) const {
  if (modulus_ && c.rows() != modulus_->degree())
    throw RingMismatch("companion size does not match modulus degree");
  const std::size_t n = c.rows();
  Matrix<Int> acc(n, n);
  for (std::size_t i = residue_.size(); i-- > 0;) {
    acc = acc * c;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += residue_[i];
  }
  return acc;
}

Matrix<Int> QuotientElem::multiplication_matrix(const ModulusPtr& m) const {
  const std::size_t d = m->degree();
  Matrix<Int> out(d, d);
  QuotientElem basis(m, {Int(1)});
  const QuotientElem z = generator(m);
  for (std::size_t j = 0; j < d; ++j) {
    QuotientElem col = *this * basis;
    for (std::size_t i = 0; i < col.residue().size(); ++i) out(i, j) = col.residue()[i];
    basis = basis * z;
  }
  return out;
}

std::string QuotientElem::to_string() const {
  if (residue_.size() <= 1) return talex::to_string(integer_value());
  return "(" + talex::to_string(IntPoly(0, residue_), modulus_ ? modulus_->name : "z") + ")";
}

int sign_of(const QuotientElem& x) {
  for (const auto& c : x.residue())
    if (sgn(c) != 0) return sgn(c);
  return 0;
}

std::string to_string(const QuotientElem& x) { return x.to_string(); }

std::optional<QuotientElem> divide_exact(const QuotientElem& a, const QuotientElem& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return a;
  ModulusPtr m = a.modulus() ? a.modulus() : b.modulus();
  if (b.is_integer()) {
    std::vector<Int> q;
    for (const auto& c : a.residue()) {
      auto qc = divide_exact(c, b.integer_value());
      if (!qc) return std::nullopt;
      q.push_back(*qc);
    }
    if (!m) return QuotientElem(q.empty() ? Int(0) : q[0]);
    return QuotientElem(m, std::move(q));
  }
  // Solve M_b x = a over Q, then insist on an integral solution.
  const Matrix<Int> mb = b.multiplication_matrix(m);
  const std::size_t d = m->degree();
  std::vector<std::vector<mpq_class>> aug(d, std::vector<mpq_class>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = mpq_class(mb(i, j));
    aug[i][d] = i < a.residue().size() ? mpq_class(a.residue()[i]) : mpq_class(0);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(aug[r][col]) == 0) continue;
      mpq_class f = aug[r][col] / aug[col][col];
      for (std::size_t k = col; k <= d; ++k) aug[r][k] -= f * aug[col][k];
    }
  }
  std::vector<Int> x(d);
  for (std::size_t i = 0; i < d; ++i) {
    mpq_class v = aug[i][d] / aug[i][i];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    x[i] = v.get_num();
  }
  return QuotientElem(m, std::move(x));
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    long d = p.min_degree() + static_cast<long>(i);
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (d != 0) out += "*" + var + (d != 1 ? "^" + std::to_string(d) : "");
  }
  return out;
}

QPoly lift(const IntPoly& p, const ModulusPtr& m) {
  return p.map_coeffs([&](const Int& c) { return QuotientElem::constant(m, c); });
}

std::optional<IntPoly> to_int_poly(const QPoly& p) {
  std::vector<Int> c;
  for (const auto& x : p.coeffs()) {
    if (!x.is_integer()) return std::nullopt;
    c.push_back(x.integer_value());
  }
  return IntPoly(p.min_degree(), std::move(c));
}

}  // namespace talex
