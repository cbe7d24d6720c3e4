#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "talex/knots.hpp"

namespace talex::verify {

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// One pure check. Report-only items are printed but never fail a run.
struct Item {
  std::string name;
  std::function<Outcome()> run;
  bool report_only = false;
};

struct Result {
  std::string name;
  bool pass = false;
  bool report_only = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  long max_n = 0;  // appendix: largest n; census: largest alpha. 0 picks the suite default.
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  long samples = 0;  // census sample count, 0 for the default
};

// Golden values of the worked examples.
std::vector<Item> dihedral_items();
std::vector<Item> binary_dihedral_items();
std::vector<Item> nqp_items();
std::vector<Item> kmeta_items();
std::vector<Item> certificate_items();
std::vector<Item> modp_golden_items();

/// Sequence identities for (XY)^k and the split elements.
std::vector<Item> sequence_items(const std::vector<long>& primes);
std::vector<Item> split_element_items(const std::vector<long>& primes);

/// q(t) against (1 + t)^n Delta_{K(1/p)}^(n-1): asserted on `asserted`, reported on `reported`.
std::vector<Item> torus_part_items(const std::vector<long>& asserted, const std::vector<long>& reported);

/// U_n conjugacy for prime 2n+1 <= u_bound, V_n^2 = 4E + C_n for prime 2n+1 <= v_bound,
/// printed matrices and the coefficient lemmas.
std::vector<Item> appendix_items(long u_bound, long v_bound);

/// Fox identity on emitted presentations, omitted-generator independence,
/// the denominator identity and the mod-p triangular structure.
std::vector<Item> structural_items(std::uint64_t seed, int triangular_samples);

/// Uniform sample of fractions beta/alpha with p | alpha <= max_alpha, p drawn from `primes`.
std::vector<std::pair<TwoBridgeFraction, long>> sample_fractions(std::uint64_t seed, int count,
                                                                 const std::vector<long>& primes, long max_alpha);

/// Total congruence for each sample and the factor congruence over all pairings.
std::vector<Item> modp_sample_items(const std::vector<std::pair<TwoBridgeFraction, long>>& samples);

/// Census: total congruence asserted, factorization and H(p) outcomes reported.
std::vector<Item> census_items(const Options& opts);

std::vector<std::string> suite_names();
/// nullopt for an unknown suite name.
std::optional<std::vector<Item>> suite(const std::string& name, const Options& opts);

/// Runs items on `jobs` worker threads; results are in item order regardless of jobs.
std::vector<Result> run(const std::vector<Item>& items, unsigned jobs);

/// True when every non-report item passed.
bool all_pass(const std::vector<Result>& results);

}  // namespace talex::verify
