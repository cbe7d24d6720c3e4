#include "talex/fox.hpp"

#include "talex/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace talex {

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw PreconditionError("FreeWord: letter exponent must be +-1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::parse(const std::string& text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i++];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') continue;
    if (!std::isalpha(static_cast<unsigned char>(c))) throw PreconditionError(std::string("bad word character '") + c + "'");
    Letter l{static_cast<char>(std::tolower(static_cast<unsigned char>(c))), std::isupper(static_cast<unsigned char>(c)) ? -1 : 1};
    long reps = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = ++i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      std::size_t k = j;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == j) throw PreconditionError("missing exponent after '^'");
      reps = std::stol(text.substr(i, k - i));
      i = k;
    }
    if (reps < 0) {
      l.exp = -l.exp;
      reps = -reps;
    }
    for (long r = 0; r < reps; ++r) out.push_back(l);
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::generator(char g, int exp) { return FreeWord({Letter{g, exp}}); }

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  FreeWord w;
  w.letters_ = std::move(out);
  return w;
}

FreeWord FreeWord::power(long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord r;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
  return r;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(all));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) s += l.exp > 0 ? l.gen : static_cast<char>(std::toupper(static_cast<unsigned char>(l.gen)));
  return s;
}

GroupRingSum::GroupRingSum(const FreeWord& w, Int c) {
  if (sgn(c) != 0) terms_.emplace(w, std::move(c));
}

GroupRingSum& GroupRingSum::add(const FreeWord& w, const Int& c) {
  if (sgn(c) == 0) return *this;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

GroupRingSum operator+(GroupRingSum a, const GroupRingSum& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, c);
  return a;
}

GroupRingSum operator-(GroupRingSum a, const GroupRingSum& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, -c);
  return a;
}

GroupRingSum operator*(const GroupRingSum& a, const GroupRingSum& b) {
  GroupRingSum r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add(u * v, c * d);
  return r;
}

GroupRingSum GroupRingSum::scaled(const Int& c) const {
  GroupRingSum r;
  for (const auto& [w, d] : terms_) r.add(w, d * c);
  return r;
}

std::string GroupRingSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    Int mag = abs(c);
    if (mag != 1) s += mag.get_str() + "*";
    s += w.to_string();
  }
  return s;
}

GroupRingSum fox_derivative(const FreeWord& r, char g) {
  GroupRingSum out;
  std::vector<Letter> prefix;
  for (const auto& l : r.letters()) {
    if (l.gen == g) {
      if (l.exp > 0) {
        out.add(FreeWord(prefix), 1);
      } else {
        std::vector<Letter> with = prefix;
        with.push_back(l);
        out.add(FreeWord(std::move(with)), -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

long abelianize(const FreeWord& w) {
  long s = 0;
  for (const auto& l : w.letters()) s += l.exp;
  return s;
}

IntPoly psi_evaluate(const GroupRingSum& s) {
  IntPoly r;
  for (const auto& [w, c] : s.terms()) r += IntPoly::monomial(c, abelianize(w));
  return r;
}

bool fundamental_identity_holds(const FreeWord& r, const std::vector<char>& generators) {
  GroupRingSum lhs;
  for (char g : generators)
    lhs = lhs + fox_derivative(r, g) * (GroupRingSum(FreeWord::generator(g)) - GroupRingSum::one());
  return lhs == GroupRingSum(r) - GroupRingSum::one();
}

}  // namespace talex
