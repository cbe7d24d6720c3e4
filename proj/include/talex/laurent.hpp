#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "talex/bigint.hpp"
#include "talex/errors.hpp"

namespace talex {

namespace detail {
// Unqualified call so ADL sees coefficient types declared after this header.
template <class R>
bool coeff_zero(const R& c) {
  return is_zero(c);
}
}  // namespace detail

/// Finitely supported Laurent polynomial sum_i c_i t^(min_degree + i) over a
/// commutative coefficient ring R.
///
/// The representation is canonical: the first and last stored coefficients
/// are nonzero, and the zero polynomial has no coefficients and min_degree 0.
/// R must provide +, -, *, unary -, ==, a default constructor producing zero,
/// and a free function is_zero(const R&).
template <class R>
class LaurentPoly {
 public:
  using coeff_type = R;

  LaurentPoly() = default;

  LaurentPoly(R c) {  // NOLINT(google-explicit-constructor)
    if (!detail::coeff_zero(c)) coeffs_.push_back(std::move(c));
  }

  template <std::integral I>
  LaurentPoly(I c) : LaurentPoly(R(static_cast<long>(c))) {}  // NOLINT

  LaurentPoly(long min_degree, std::vector<R> coeffs)
      : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
    trim();
  }

  static LaurentPoly monomial(R c, long degree) {
    LaurentPoly p(std::move(c));
    if (!p.is_zero()) p.min_degree_ = degree;
    return p;
  }

  /// The polynomial t.
  static LaurentPoly t() { return monomial(R(1L), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long min_degree() const { return min_degree_; }
  /// Degree of the top term; min_degree() - 1 for the zero polynomial.
  long max_degree() const { return min_degree_ + static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  R coeff(long degree) const {
    long i = degree - min_degree_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return R();
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const R& lowest() const { return coeffs_.front(); }
  const R& leading() const { return coeffs_.back(); }

  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && min_degree_ == 0); }
  bool is_polynomial() const { return coeffs_.empty() || min_degree_ >= 0; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long lo = std::min(min_degree_, o.min_degree_);
    long hi = std::max(max_degree(), o.max_degree());
    std::vector<R> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[static_cast<std::size_t>(min_degree_ - lo) + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      R& slot = out[static_cast<std::size_t>(o.min_degree_ - lo) + i];
      slot = slot + o.coeffs_[i];
    }
    min_degree_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentPoly(a.min_degree_ + b.min_degree_, std::move(out));
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const R& c) const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by t^k.
  LaurentPoly shift(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_degree_ += k;
    return r;
  }

  /// The substitution t -> -t.
  LaurentPoly negate_t() const {
    LaurentPoly r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      long d = r.min_degree_ + static_cast<long>(i);
      if (d % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
  }

  /// The substitution t -> t^m for m >= 1.
  LaurentPoly substitute_power(long m) const {
    if (m < 1) throw PreconditionError("substitute_power: exponent must be positive");
    if (is_zero()) return {};
    std::vector<R> out(static_cast<std::size_t>((static_cast<long>(coeffs_.size()) - 1) * m + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(m)] = coeffs_[i];
    return LaurentPoly(min_degree_ * m, std::move(out));
  }

  /// The substitution t -> t^-1.
  LaurentPoly reflect() const {
    std::vector<R> out(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-max_degree(), std::move(out));
  }

  /// Multiply by t^-min_degree so the lowest term sits at degree 0.
  LaurentPoly lowered() const { return shift(-min_degree_); }

  template <class F>
  auto map_coeffs(F&& f) const -> LaurentPoly<std::invoke_result_t<F, const R&>> {
    using S = std::invoke_result_t<F, const R&>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return LaurentPoly<S>(min_degree_, std::move(out));
  }

  /// Even part (odd == false) or odd part of the polynomial.
  LaurentPoly parity_part(bool odd) const {
    std::vector<R> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      long d = min_degree_ + static_cast<long>(i);
      if ((d % 2 != 0) == odd) out[i] = coeffs_[i];
    }
    return LaurentPoly(min_degree_, std::move(out));
  }

 private:
  void trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && detail::coeff_zero(coeffs_[lo])) ++lo;
    if (lo == coeffs_.size()) {
      coeffs_.clear();
      min_degree_ = 0;
      return;
    }
    std::size_t hi = coeffs_.size();
    while (detail::coeff_zero(coeffs_[hi - 1])) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
      coeffs_ = std::vector<R>(std::make_move_iterator(coeffs_.begin() + static_cast<long>(lo)),
                               std::make_move_iterator(coeffs_.begin() + static_cast<long>(hi)));
      min_degree_ += static_cast<long>(lo);
    }
  }

  long min_degree_ = 0;
  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const LaurentPoly<R>& p) {
  return p.is_zero();
}

using IntPoly = LaurentPoly<Int>;

template <class R>
LaurentPoly<R> pow(const LaurentPoly<R>& base, unsigned long exp) {
  LaurentPoly<R> result(R(1L));
  LaurentPoly<R> b = base;
  while (exp > 0) {
    if (exp & 1UL) result = result * b;
    exp >>= 1;
    if (exp > 0) b = b * b;
  }
  return result;
}

/// Canonical representative modulo the units +-t^k: lowest term moved to
/// degree 0 and its sign made positive.
template <class R>
LaurentPoly<R> canonical(const LaurentPoly<R>& p) {
  if (p.is_zero()) return p;
  LaurentPoly<R> r = p.lowered();
  if (sign_of(r.lowest()) < 0) r = -r;
  return r;
}

template <class R>
bool equal_up_to_units(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
  return canonical(a) == canonical(b);
}

/// Exact quotient num / den; throws NonExactDivision when den does not
/// divide num in R[t, t^-1].
template <class R>
LaurentPoly<R> exact_div(const LaurentPoly<R>& num, const LaurentPoly<R>& den) {
  if (den.is_zero()) throw PreconditionError("exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};
  const auto& d = den.coeffs();
  std::vector<R> rem = num.coeffs();
  const std::size_t ds = d.size();
  if (rem.size() < ds) throw NonExactDivision("exact_div: degree span of divisor too large", "nonzero");
  const std::size_t qs = rem.size() - ds + 1;
  std::vector<R> q(qs);
  for (std::size_t k = qs; k-- > 0;) {
    const R& top = rem[k + ds - 1];
    if (detail::coeff_zero(top)) continue;
    auto qk = divide_exact(top, d.back());
    if (!qk) throw NonExactDivision("exact_div: leading coefficient does not divide", "nonzero");
    for (std::size_t j = 0; j < ds; ++j) rem[k + j] = rem[k + j] - *qk * d[j];
    q[k] = std::move(*qk);
  }
  for (const auto& c : rem)
    if (!detail::coeff_zero(c)) throw NonExactDivision("exact_div: nonzero remainder", "nonzero");
  return LaurentPoly<R>(num.min_degree() - den.min_degree(), std::move(q));
}

/// Text form "c0 + c1*t + c2*t^2" with explicit signs, variable name configurable.
std::string to_string(const IntPoly& p, const std::string& var = "t");

/// Evaluates t^-min_degree * p at x (the polynomial part after clearing
/// negative powers); units +-t^k only change the result by a power of x.
Int eval_lowered(const IntPoly& p, const Int& x);

/// Lexicographic comparison of (min_degree, coeffs) used to pick canonical
/// representatives between a polynomial and its t -> -t image.
bool lex_less(const IntPoly& a, const IntPoly& b);

/// sum_i c_i t^i from an ascending list of small integers.
IntPoly int_poly(std::initializer_list<long> ascending, long min_degree = 0);

}  // namespace talex
