#pragma once

// Reference values for the worked examples, stored in factored form exactly
// as printed and expanded on demand.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "talex/laurent.hpp"

namespace talex::golden {

/// sum c t^d from (degree, coefficient) pairs.
inline IntPoly sparse(std::initializer_list<std::pair<long, long>> terms) {
  IntPoly r;
  for (const auto& [d, c] : terms) r += IntPoly::monomial(Int(c), d);
  return r;
}

/// prod f_i^{e_i}.
inline IntPoly product(std::initializer_list<std::pair<IntPoly, unsigned long>> factors) {
  IntPoly r(1);
  for (const auto& [f, e] : factors) r *= pow(f, e);
  return r;
}

inline IntPoly one_minus(long d) { return sparse({{0, 1}, {d, -1}}); }
inline IntPoly one_plus(long d) { return sparse({{0, 1}, {d, 1}}); }

inline IntPoly delta_1_5() { return int_poly({1, -1, 1, -1, 1}); }
inline IntPoly delta_5_27() { return int_poly({1, -1, 1}) * int_poly({2, -2, 1, -2, 2}); }
inline IntPoly g_19_85() { return int_poly({2, -2, 2, -2, 1, -2, 2, -2, 2}); }
inline IntPoly g_21_115() { return int_poly({2, -2, 2, -2, 2, -3, 2, -2, 2, -2, 2}); }
inline IntPoly delta_8_5() { return int_poly({1, -1, 1}) * int_poly({1, -2, 1, -2, 1}); }
inline IntPoly delta_5_9() { return int_poly({2, -5, 2}); }

inline IntPoly f_19_85() {
  return int_poly({1, -3, -2, 4, -1, 0, -4, -3, 7, -3, -4, 0, -1, 4, -2, -3, 1});
}
inline IntPoly f_21_115() {
  return int_poly({4, 2, -3, -1, 0, -8, -3, 4, 0, 1, 9, 1, 0, 4, -3, -8, 0, -1, -3, 2, 4});
}

struct Item {
  std::string label;
  std::string knot;  // "beta/alpha" or a preset name
  long p = 0;
  long q = 0;        // nqp parameter, or k for kmeta
  IntPoly expected;
};

/// Dihedral totals D.
inline std::vector<Item> dihedral() {
  const IntPoly d15 = delta_1_5();
  const IntPoly base5 = product({{one_minus(2), 2}, {d15, 1}, {d15.negate_t(), 1}});
  return {
      {"1/3 p=3", "1/3", 3, 0, one_minus(2)},
      {"1/9 p=3", "1/9", 3, 0, product({{one_minus(2), 1}, {sparse({{0, 1}, {3, -1}, {6, 1}}), 1},
                                     {sparse({{0, 1}, {3, 1}, {6, 1}}), 1}})},
      {"5/27 p=3", "5/27", 3, 0, product({{one_minus(2), 1}, {int_poly({1, 1, -1, 1, 1}), 1},
                                      {int_poly({1, -1, -1, -1, 1}), 1}})},
      {"1/5 p=5", "1/5", 5, 0, base5},
      {"19/85 p=5", "19/85", 5, 0, base5 * f_19_85() * f_19_85().negate_t()},
      {"21/115 p=5", "21/115", 5, 0, base5 * f_21_115() * f_21_115().negate_t()},
  };
}

/// Binary dihedral totals.
inline std::vector<Item> binary_dihedral() {
  const IntPoly c10 = sparse({{0, 1}, {2, -1}, {4, 1}, {6, -1}, {8, 1}});
  const IntPoly f = sparse({{0, 1},   {2, 13},  {4, 26},  {6, 20},  {8, 13},  {10, 22}, {12, 40},
                            {14, 33}, {16, 25}, {18, 33}, {20, 40}, {22, 22}, {24, 13}, {26, 20},
                            {28, 26}, {30, 13}, {32, 1}});
  return {
      {"1/9 p=3", "1/9", 3, 0, product({{one_plus(2), 2}, {sparse({{0, 1}, {6, -1}, {12, 1}}), 2}})},
      {"5/27 p=3", "5/27", 3, 0,
       product({{one_plus(2), 2}, {sparse({{0, 1}, {2, 3}, {4, 1}, {6, 3}, {8, 1}}), 2}})},
      {"1/5 p=5", "1/5", 5, 0, product({{one_plus(2), 4}, {c10, 2}})},
      {"19/85 p=5", "19/85", 5, 0, product({{one_plus(2), 4}, {c10, 2}, {f, 2}})},
  };
}

/// Totals for the 2pq-dimensional N(q,p) representation.
inline std::vector<Item> nqp() {
  auto tri = [](long d) { return sparse({{0, 1}, {d, 1}, {2 * d, 1}}); };
  const IntPoly pent6 = sparse({{0, 1}, {6, 1}, {12, 1}, {18, 1}, {24, 1}});
  const IntPoly big = sparse({{0, 1},     {6, -1243}, {12, 3335}, {18, 1570},  {24, -2423}, {30, 6320},
                              {36, -992}, {42, -2181}, {48, 9451}, {54, -2181}, {60, -992},  {66, 6320},
                              {72, -2423}, {78, 1570}, {84, 3335}, {90, -1243}, {96, 1}});
  return {
      {"1/3 p=3 q=4", "1/3", 3, 4, product({{one_minus(8), 1}, {tri(8), 1}})},
      {"1/9 p=3 q=4", "1/9", 3, 4, product({{one_minus(8), 1}, {tri(8), 1}, {tri(24), 3}})},
      {"5/27 p=3 q=4", "5/27", 3, 4,
       product({{one_minus(8), 1},
                {tri(8), 1},
                {sparse({{0, 16}, {8, 31}, {16, 16}}), 2},
                {sparse({{0, 1}, {8, -79}, {16, 129}, {24, -79}, {32, 1}}), 2}})},
      {"1/3 p=3 q=5", "1/3", 3, 5, product({{one_minus(10), 1}, {tri(10), 1}})},
      {"1/9 p=3 q=5", "1/9", 3, 5, product({{one_minus(10), 1}, {tri(10), 1}, {tri(30), 3}})},
      {"5/27 p=3 q=5", "5/27", 3, 5,
       product({{one_minus(10), 1},
                {tri(10), 1},
                {sparse({{0, 1}, {10, -228}, {20, -314}, {30, -228}, {40, 1}}), 2},
                {sparse({{0, 1024}, {20, 1201}, {40, 1024}}), 1}})},
      {"1/5 p=5 q=3", "1/5", 5, 3, product({{one_minus(6), 3}, {pent6, 3}})},
      {"19/85 p=5 q=3", "19/85", 5, 3,
       product({{one_minus(6), 3},
                {pent6, 3},
                {sparse({{0, 64}, {6, 64}, {12, 48}, {18, 12}, {24, 49}, {30, 12}, {36, 48}, {42, 64}, {48, 64}}), 1},
                {big, 2}})},
  };
}

/// K-metacyclic examples: expected F with twisted = [Delta/(1-t)] F. Field q holds k.
struct KmetaItem {
  std::string label;
  std::string knot;
  long p = 0;
  long k = 0;
  std::string pattern;  // generator assignment for presets, empty for two-bridge knots
  IntPoly delta;
  IntPoly f;
  long period = 0;      // exponents of F are multiples of this
};

inline std::vector<KmetaItem> kmeta() {
  const IntPoly tre = int_poly({1, -1, 1});
  const IntPoly d19 = int_poly({1, -1, 1, -1, 1, -1, 1, -1, 1});
  return {
      {"1/3 p=7 k=-2", "1/3", 7, -2, "", tre, one_minus(6), 6},
      // K(1/9) is fibered of genus 4, so the total is monic of degree 7 * 7 = 49.
      // A single factor 1 - t^6 + t^12 would leave degree 25; the one-relator
      // torus formula gives the cube of 1 + t^6 + t^12.
      {"1/9 p=7 k=-2", "1/9", 7, -2, "", d19, one_minus(6) * pow(sparse({{0, 1}, {6, 1}, {12, 1}}), 3), 6},
      {"5/27 p=7 k=-2", "5/27", 7, -2, "", delta_5_27(),
       one_minus(6) * sparse({{0, 1}, {6, -7}, {12, 9}, {18, -7}, {24, 1}}), 6},
      {"5/9 p=5 k=2", "5/9", 5, 2, "", delta_5_9(), one_minus(4), 4},
      {"5/9 p=11 k=2", "5/9", 11, 2, "", delta_5_9(), one_minus(10), 10},
      {"5/9 p=7 k=2", "5/9", 7, 2, "", delta_5_9(), pow(one_minus(3), 2), 3},
      {"8_5 p=7 k=-2", "8_5", 7, -2, "XYX", delta_8_5(),
       one_minus(6) * sparse({{0, 1}, {6, -72}, {12, -82}, {18, -72}, {24, 1}}), 6},
  };
}

/// Knot 8_5: f_1 and f_2 with twisted = [Delta/(1-t)] f(t) f(-t).
inline IntPoly f1_8_5() { return int_poly({1, 1}) * int_poly({1, 1, -2, 1, 1}); }
inline IntPoly f2_8_5() {
  return pow(int_poly({1, 1}), 3) * int_poly({1, 2, 0, -7, -13, -13, -11, -13, -13, -7, 0, 2, 1});
}
inline IntPoly rho3_8_5() {
  return product({{one_plus(2), 2}, {sparse({{0, 1}, {2, 5}, {4, 4}, {6, 5}, {8, 1}}), 2}});
}
inline IntPoly rho4_8_5() {
  return product({{one_plus(2), 6},
                  {sparse({{0, 1}, {2, 4}, {4, 2}, {6, 19}, {8, 13}, {10, 37}, {12, 17}, {14, 37}, {16, 13},
                           {18, 19}, {20, 2}, {22, 4}, {24, 1}}),
                   2}});
}

/// Printed U_n and V_n matrices, row-major.
inline std::vector<std::vector<long>> u4() {
  return {{4, 3, 2, 1, 0, -1, -2, -3}, {10, 4, 1, 0, 0, 0, -1, -4}, {6, 1, 0, 0, 0, 0, 0, -1},
          {1, 0, 0, 0, 0, 0, 0, 0},    {1, 1, 1, 1, 1, 1, 1, 1},     {6, 3, 1, 0, 0, 1, 3, 6},
          {5, 1, 0, 0, 0, 0, 1, 5},    {1, 0, 0, 0, 0, 0, 0, 1}};
}
inline std::vector<std::vector<long>> u5() {
  return {{5, 4, 3, 2, 1, 0, -1, -2, -3, -4},   {20, 10, 4, 1, 0, 0, 0, -1, -4, -10},
          {21, 6, 1, 0, 0, 0, 0, 0, -1, -6},    {8, 1, 0, 0, 0, 0, 0, 0, 0, -1},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},       {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          {10, 6, 3, 1, 0, 0, 1, 3, 6, 10},     {15, 5, 1, 0, 0, 0, 0, 1, 5, 15},
          {7, 1, 0, 0, 0, 0, 0, 0, 1, 7},       {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}};
}
inline std::vector<std::vector<std::vector<long>>> v_list() {
  return {{{1}},
          {{3, -5}, {1, -2}},
          {{5, -7, 14}, {5, -9, 21}, {1, -2, 5}},
          {{7, -9, 18, -45}, {14, -23, 51, -132}, {7, -13, 31, -84}, {1, -2, 5, -14}},
          {{9, -11, 22, -55, 154},
           {30, -46, 99, -253, 715},
           {27, -47, 108, -286, 825},
           {9, -17, 41, -112, 330},
           {1, -2, 5, -14, 42}}};
}

}  // namespace talex::golden
