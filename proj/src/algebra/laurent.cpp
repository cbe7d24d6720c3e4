#include "talex/laurent.hpp"

#include <sstream>

namespace talex {

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Int& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    long d = p.min_degree() + static_cast<long>(i);
    Int mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (d != 1) out << '^' << d;
  }
  return out.str();
}

Int eval_lowered(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

bool lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.min_degree() != b.min_degree()) return a.min_degree() < b.min_degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return x.size() < y.size();
}

IntPoly int_poly(std::initializer_list<long> ascending, long min_degree) {
  std::vector<Int> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return IntPoly(min_degree, std::move(c));
}

}  // namespace talex
