#pragma once

#include <map>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/fox.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

/// Assignment generator -> (invertible matrix, t-degree). Evaluating a word
/// multiplies images left to right; the abelian factor is t^(exponent sum).
template <class R>
class MatrixRep {
 public:
  MatrixRep() = default;
  explicit MatrixRep(std::string name) : name_(std::move(name)) {}

  void assign(char g, Matrix<R> image, Matrix<R> inverse, long t_degree = 1) {
    if (!image.square() || !inverse.square() || image.rows() != inverse.rows())
      throw PreconditionError("MatrixRep: images must be square of equal size");
    if (dim_ == 0) dim_ = image.rows();
    if (image.rows() != dim_) throw PreconditionError("MatrixRep: dimension mismatch");
    if (!(image * inverse == Matrix<R>::identity(dim_))) throw PreconditionError("MatrixRep: inverse is wrong");
    images_[g] = std::move(image);
    inverses_[g] = std::move(inverse);
    degrees_[g] = t_degree;
  }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool has(char g) const { return images_.count(g) != 0; }

  const Matrix<R>& image(char g) const { return lookup(images_, g); }
  const Matrix<R>& inverse(char g) const { return lookup(inverses_, g); }
  long t_degree(char g) const {
    auto it = degrees_.find(g);
    if (it == degrees_.end()) throw PreconditionError(std::string("unassigned generator '") + g + "'");
    return it->second;
  }

  const Matrix<R>& letter_image(const Letter& l) const { return l.exp > 0 ? image(l.gen) : inverse(l.gen); }

  Matrix<R> word_image(const FreeWord& w) const {
    Matrix<R> m = Matrix<R>::identity(dim_);
    for (const auto& l : w.letters()) m = m * letter_image(l);
    return m;
  }

  long word_degree(const FreeWord& w) const {
    long d = 0;
    for (const auto& l : w.letters()) d += l.exp * t_degree(l.gen);
    return d;
  }

  bool kills(const FreeWord& relator) const { return word_image(relator) == Matrix<R>::identity(dim_); }

 private:
  static const Matrix<R>& lookup(const std::map<char, Matrix<R>>& m, char g) {
    auto it = m.find(g);
    if (it == m.end()) throw PreconditionError(std::string("unassigned generator '") + g + "'");
    return it->second;
  }

  std::string name_;
  std::size_t dim_ = 0;
  std::map<char, Matrix<R>> images_;
  std::map<char, Matrix<R>> inverses_;
  std::map<char, long> degrees_;
};

/// Collects per-degree coefficient matrices into one matrix of Laurent polynomials.
template <class R>
Matrix<LaurentPoly<R>> assemble(const std::map<long, Matrix<R>>& by_degree, std::size_t dim) {
  Matrix<LaurentPoly<R>> out(dim, dim);
  if (by_degree.empty()) return out;
  const long lo = by_degree.begin()->first;
  const long hi = by_degree.rbegin()->first;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<R> c(static_cast<std::size_t>(hi - lo + 1));
      for (const auto& [d, m] : by_degree) c[static_cast<std::size_t>(d - lo)] = m(i, j);
      out(i, j) = LaurentPoly<R>(lo, std::move(c));
    }
  return out;
}

/// Image of a group-ring sum: sum c * rep(word) * t^deg(word).
template <class R>
Matrix<LaurentPoly<R>> rep_evaluate(const GroupRingSum& s, const MatrixRep<R>& rep) {
  std::map<long, Matrix<R>> acc;
  for (const auto& [w, c] : s.terms()) {
    if (!c.fits_slong_p()) throw PreconditionError("rep_evaluate: coefficient too large");
    Matrix<R> m = rep.word_image(w).scaled(R(c.get_si()));
    long d = rep.word_degree(w);
    auto it = acc.find(d);
    if (it == acc.end()) acc.emplace(d, std::move(m));
    else it->second += m;
  }
  return assemble(acc, rep.dim());
}

/// Image of the Fox derivative dR/dg computed by a single prefix walk over R.
template <class R>
Matrix<LaurentPoly<R>> fox_matrix_image(const FreeWord& r, char g, const MatrixRep<R>& rep) {
  std::map<long, Matrix<R>> acc;
  Matrix<R> prefix = Matrix<R>::identity(rep.dim());
  long degree = 0;
  auto add = [&](long d, Matrix<R> m) {
    auto it = acc.find(d);
    if (it == acc.end()) acc.emplace(d, std::move(m));
    else it->second += m;
  };
  for (const auto& l : r.letters()) {
    if (l.gen == g) {
      if (l.exp > 0) add(degree, prefix);
      else add(degree - rep.t_degree(g), -(prefix * rep.inverse(g)));
    }
    prefix = prefix * rep.letter_image(l);
    degree += l.exp * rep.t_degree(l.gen);
  }
  return assemble(acc, rep.dim());
}

/// rep(g) * t^deg(g) - I as a matrix of Laurent polynomials.
template <class R>
Matrix<LaurentPoly<R>> generator_minus_identity(char g, const MatrixRep<R>& rep) {
  const std::size_t n = rep.dim();
  Matrix<LaurentPoly<R>> out(n, n);
  const Matrix<R>& m = rep.image(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = LaurentPoly<R>::monomial(m(i, j), rep.t_degree(g));
      if (i == j) out(i, j) -= LaurentPoly<R>(R(1L));
    }
  return out;
}

}  // namespace talex
