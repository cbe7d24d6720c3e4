#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "talex/factorization.hpp"
#include "talex/golden.hpp"
#include "talex/modp.hpp"
#include "talex/twisted.hpp"
#include "talex/verify.hpp"

namespace talex::verify {

namespace {

TwoBridgeFraction frac(const std::string& s) { return parse_fraction(s); }

std::string degree_note(const IntPoly& p) {
  if (p.is_zero()) return "zero";
  return "span " + std::to_string(p.max_degree() - p.min_degree());
}

Outcome compare(const IntPoly& got, const IntPoly& expected) {
  if (got == canonical(expected)) return {true, degree_note(got)};
  return {false, "got " + to_string(got)};
}

bool same_pair(const IntPoly& a, const IntPoly& b) { return pair_representative(a) == pair_representative(b); }

Outcome all_of(std::initializer_list<std::pair<bool, const char*>> parts, std::string note = {}) {
  std::string failed;
  for (const auto& [ok, what] : parts)
    if (!ok) failed += (failed.empty() ? "" : ", ") + std::string(what);
  if (failed.empty()) return {true, std::move(note)};
  return {false, "failed: " + failed};
}

}  // namespace

std::vector<Item> dihedral_items() {
  std::vector<Item> out;
  for (const auto& item : golden::dihedral())
    out.push_back({"dihedral total " + item.label,
                   [item] { return compare(dihedral_total(frac(item.knot), item.p), item.expected); }});
  return out;
}

std::vector<Item> binary_dihedral_items() {
  std::vector<Item> out;
  for (const auto& item : golden::binary_dihedral())
    out.push_back({"binary dihedral total " + item.label, [item] {
                     const BinaryDihedralResult r = binary_dihedral_total(frac(item.knot), item.p);
                     return all_of({{r.total == canonical(item.expected), "golden value"},
                                    {r.cross_check, "product over +-i"}},
                                   degree_note(r.total));
                   }});
  return out;
}

std::vector<Item> nqp_items() {
  std::vector<Item> out;
  for (const auto& item : golden::nqp())
    out.push_back({"N(q,p) total " + item.label, [item] {
                     const NqpResult r = nqp_total(frac(item.knot), item.q, item.p, false);
                     return all_of({{r.direct == canonical(item.expected), "golden value"},
                                    {r.match, "product formula"},
                                    {r.exponents_divisible, "exponents divisible by 2q"}},
                                   degree_note(r.direct));
                   }});
  return out;
}

std::vector<Item> kmeta_items() {
  std::vector<Item> out;
  for (const auto& item : golden::kmeta())
    out.push_back({"K-metacyclic " + item.label, [item] {
                     const Presentation pres = item.pattern.empty() ? presentation(frac(item.knot)) : preset(item.knot);
                     const KmetaReport r = kmeta_total(pres, item.p, item.k, item.pattern.empty() ? "XY" : item.pattern);
                     const bool quotient_ok = r.quotient && *r.quotient == canonical(item.f);
                     const bool periodic = r.quotient && exponents_multiple_of(*r.quotient, item.period);
                     return all_of({{r.alexander == canonical(item.delta), "Alexander polynomial"},
                                    {quotient_ok, "golden quotient"},
                                    {periodic, "quotient periodic"}},
                                   "period " + std::to_string(item.period));
                   }});

  // Knot 8_5 under the two permutation and two binary dihedral representations.
  const IntPoly one_minus_t = int_poly({1, -1});
  out.push_back({"8_5 permutation D_3", [one_minus_t] {
                   const Presentation pres = preset("8_5");
                   const IntPoly f = golden::f1_8_5();
                   return compare(perm_dihedral_total(pres, 3, "XYX"),
                                  exact_div(golden::delta_8_5() * f * f.negate_t(), one_minus_t));
                 }});
  out.push_back({"8_5 permutation D_7", [one_minus_t] {
                   const Presentation pres = preset("8_5");
                   const IntPoly f = golden::f2_8_5();
                   return compare(perm_dihedral_total(pres, 7, "XYY"),
                                  exact_div(golden::delta_8_5() * f * f.negate_t(), one_minus_t));
                 }});
  out.push_back({"8_5 binary dihedral p=3",
                 [] { return compare(binary_dihedral_total(preset("8_5"), 3, "XYX"), golden::rho3_8_5()); }});
  out.push_back({"8_5 binary dihedral p=7",
                 [] { return compare(binary_dihedral_total(preset("8_5"), 7, "XYY"), golden::rho4_8_5()); }});
  return out;
}

std::vector<Item> certificate_items() {
  struct Case {
    const char* knot;
    long p;
    IntPoly torus;
    IntPoly part;
  };
  const IntPoly one_plus_t = int_poly({1, 1});
  const IntPoly q5 = pow(one_plus_t, 2) * golden::delta_1_5();
  const std::vector<Case> cases = {
      {"1/3", 3, one_plus_t, IntPoly(1)},
      {"1/9", 3, one_plus_t, int_poly({1, 0, 0, 1, 0, 0, 1})},
      {"5/27", 3, one_plus_t, int_poly({1, 1, -1, 1, 1})},
      {"1/5", 5, q5, IntPoly(1)},
      {"19/85", 5, q5, golden::f_19_85()},
      {"21/115", 5, q5, golden::f_21_115()},
  };
  std::vector<Item> out;
  for (const auto& c : cases)
    out.push_back({"factorization certificate " + std::string(c.knot) + " p=" + std::to_string(c.p), [c] {
                     const FactorCertificate cert = f_polynomial(frac(c.knot), c.p);
                     const bool product = canonical(cert.F * cert.F.negate_t()) == dihedral_total(frac(c.knot), c.p);
                     // Each printed factor is fixed only up to t -> -t.
                     const bool printed = same_pair(cert.F, c.torus * c.part) ||
                                          same_pair(cert.F, c.torus * c.part.negate_t());
                     return all_of({{product, "F(t) F(-t) = D"},
                                    {same_pair(cert.q, c.torus), "torus part"},
                                    {printed, "printed factor"}},
                                   "deg F = " + std::to_string(cert.F.max_degree()));
                   }});
  return out;
}

std::vector<Item> modp_golden_items() {
  std::vector<Item> out;
  for (const auto& item : golden::dihedral())
    out.push_back({"mod-p congruence " + item.label, [item] {
                     const TwoBridgeFraction f = frac(item.knot);
                     const ModpReport r = modp_congruence(f, item.p);
                     const bool factor =
                         modp_f_congruence(f, item.p);
                     return all_of({{r.applicable, "Delta(-1) = 0 mod p"},
                                    {r.total_congruence, "total"},
                                    {factor, "factor f"}});
                   }});
  return out;
}

std::vector<std::pair<TwoBridgeFraction, long>> sample_fractions(std::uint64_t seed, int count,
                                                                 const std::vector<long>& primes, long max_alpha) {
  std::vector<long> usable;
  for (long p : primes)
    if (p <= max_alpha) usable.push_back(p);
  std::vector<std::pair<TwoBridgeFraction, long>> out;
  if (usable.empty()) return out;
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const long p = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    const long odd_multiples = (max_alpha / p + 1) / 2;  // alpha = p (2m + 1) <= max_alpha
    const long alpha = p * (2 * std::uniform_int_distribution<long>(0, odd_multiples - 1)(rng) + 1);
    const long beta = std::uniform_int_distribution<long>(1, alpha - 1)(rng);
    if (std::gcd(alpha, beta) == 1) out.emplace_back(TwoBridgeFraction(beta, alpha), p);
  }
  return out;
}

std::vector<Item> modp_sample_items(const std::vector<std::pair<TwoBridgeFraction, long>>& samples) {
  std::vector<Item> out;
  for (const auto& [f, p] : samples)
    out.push_back({"mod-p congruence " + f.to_string() + " p=" + std::to_string(p), [f = f, p = p] {
                     const ModpReport r = modp_congruence(f, p);
                     const bool factor = modp_f_congruence(f, p);
                     return all_of({{r.applicable, "Delta(-1) = 0 mod p"},
                                    {r.total_congruence, "total"},
                                    {factor, "factor f"}});
                   }});
  return out;
}

std::vector<Item> census_items(const Options& opts) {
  const long max_alpha = opts.max_n > 0 ? opts.max_n : 75;
  const int count = opts.samples > 0 ? static_cast<int>(opts.samples) : 40;
  std::vector<Item> out;
  for (const auto& [f, p] : sample_fractions(opts.seed, count, {3, 5, 7}, max_alpha)) {
    const std::string tag = f.to_string() + " p=" + std::to_string(p);
    out.push_back({"total congruence " + tag, [f = f, p = p] {
                     const ModpReport r = modp_congruence(f, p);
                     return all_of({{r.applicable, "Delta(-1) = 0 mod p"}, {r.total_congruence, "total"}});
                   }});
    out.push_back({"factorization " + tag,
                   [f = f, p = p] {
                     const ConjectureReport r = conjecture_report(f, p);
                     std::string note = std::string("split ") + (r.split ? "yes" : "no") + ", hp " + r.hp +
                                        ", pairing " + (r.factorization_exists ? "yes" : "no") + ", f mod p " +
                                        (r.modp ? "yes" : "no");
                     return Outcome{r.factorization_exists && r.modp, note};
                   },
                   true});
  }
  return out;
}

std::vector<std::string> suite_names() { return {"paper", "identities", "appendix", "census"}; }

std::optional<std::vector<Item>> suite(const std::string& name, const Options& opts) {
  std::vector<Item> out;
  auto append = [&out](std::vector<Item> more) {
    for (auto& i : more) out.push_back(std::move(i));
  };
  if (name == "paper") {
    append(dihedral_items());
    append(binary_dihedral_items());
    append(nqp_items());
    append(kmeta_items());
    append(certificate_items());
    append(modp_golden_items());
  } else if (name == "identities") {
    append(sequence_items({3, 5, 7, 11, 13}));
    append(split_element_items({3, 5, 7, 11}));
    append(torus_part_items({3, 5, 7, 11}, {13}));
    append(structural_items(opts.seed, 20));
  } else if (name == "appendix") {
    const long bound_u = opts.max_n > 0 ? 2 * opts.max_n + 1 : 41;
    const long bound_v = opts.max_n > 0 ? 2 * opts.max_n + 1 : 101;
    append(appendix_items(bound_u, bound_v));
  } else if (name == "census") {
    append(census_items(opts));
  } else {
    return std::nullopt;
  }
  return out;
}

std::vector<Result> run(const std::vector<Item>& items, unsigned jobs) {
  std::vector<Result> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const Item& item = items[i];
      Result& r = results[i];
      r.name = item.name;
      r.report_only = item.report_only;
      const auto start = std::chrono::steady_clock::now();
      try {
        const Outcome o = item.run();
        r.pass = o.pass;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

bool all_pass(const std::vector<Result>& results) {
  return std::all_of(results.begin(), results.end(), [](const Result& r) { return r.pass || r.report_only; });
}

}  // namespace talex::verify
