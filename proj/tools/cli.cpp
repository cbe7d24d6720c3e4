#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "talex/errors.hpp"
#include "talex/factorization.hpp"
#include "talex/json_io.hpp"
#include "talex/twisted.hpp"
#include "talex/verify.hpp"

namespace talex::cli {

namespace {

using nlohmann::json;

// Bad knot text is a usage problem, not a precondition failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Knot {
  std::string text;
  Presentation pres;
  std::optional<TwoBridgeFraction> fraction;
};

Knot resolve(const std::string& text) {
  if (has_preset(text)) return {text, preset(text), std::nullopt};
  try {
    const TwoBridgeFraction f = parse_fraction(text);
    return {text, presentation(f), f};
  } catch (const PreconditionError& e) {
    throw UsageError("not a fraction beta/alpha or a preset name: " + text + " (" + e.what() + ")");
  }
}

const TwoBridgeFraction& need_fraction(const Knot& k, const char* command) {
  if (!k.fraction) throw UsageError(std::string(command) + " needs a two-bridge fraction, not a preset");
  return *k.fraction;
}

std::optional<long> max_degree_from_env() {
  const char* env = std::getenv("TALEX_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw UsageError("TALEX_MAX_DEGREE must be a positive integer");
  return v;
}

// Rough upper bound for the degree span of a twisted polynomial: the
// representation dimension times the longest relator.
void guard(const Knot& k, long dim) {
  const auto cap = max_degree_from_env();
  if (!cap) return;
  std::size_t longest = 0;
  for (const auto& r : k.pres.relators) longest = std::max(longest, r.length());
  const long estimate = dim * static_cast<long>(longest);
  if (estimate > *cap)
    throw DegreeGuard("estimated degree " + std::to_string(estimate) + " exceeds TALEX_MAX_DEGREE=" +
                      std::to_string(*cap));
}

// Without an explicit pattern, try the alternating assignment first and then
// every other pattern that starts with X.
template <class F>
auto with_pattern(const Presentation& pres, const std::string& given, F&& f) {
  if (!given.empty()) return f(given);
  const std::size_t k = pres.generators.size();
  std::vector<std::string> candidates;
  std::string alternating;
  for (std::size_t i = 0; i < k; ++i) alternating += i % 2 == 0 ? 'X' : 'Y';
  candidates.push_back(alternating);
  for (unsigned long mask = 0; mask < (1UL << (k - 1)); ++mask) {
    std::string s = "X";
    for (std::size_t i = 1; i < k; ++i) s += (mask >> (k - 1 - i)) & 1 ? 'X' : 'Y';
    if (s != alternating) candidates.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    try {
      return f(candidates[i]);
    } catch (const NoValidAssignment&) {
    }
  }
  return f(candidates.back());
}

struct Printer {
  std::ostream& out;
  bool as_json;
  json doc = json::object();

  void poly(const std::string& key, const IntPoly& p) {
    if (as_json) doc[key] = poly_to_json(p);
    else out << key << " = " << to_string(p) << '\n';
  }
  void opt_poly(const std::string& key, const std::optional<IntPoly>& p) {
    if (p) return poly(key, *p);
    if (as_json) doc[key] = nullptr;
    else out << key << " = (none)\n";
  }
  template <class T>
  void value(const std::string& key, const T& v) {
    if (as_json) doc[key] = v;
    else out << key << " = " << v << '\n';
  }
  void flag(const std::string& key, bool v) {
    if (as_json) doc[key] = v;
    else out << key << " = " << (v ? "true" : "false") << '\n';
  }
  void finish() {
    if (as_json) out << doc.dump(2) << '\n';
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"talex: twisted Alexander polynomials of knots under dihedral and metacyclic representations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string knot_text, pattern, rep = "irr", preset_name;
  long p = 0, q = 0, k = 0;
  bool factor = false;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("knot", knot_text, "beta/alpha or a preset name")->required();

  auto* dih = app.add_subcommand("dihedral", "Total twisted polynomial for the dihedral representation");
  dih->add_option("knot", knot_text)->required();
  dih->add_option("-p", p, "Odd prime dividing alpha")->required();
  dih->add_flag("--factor", factor, "Also produce F(t) with F(t) F(-t) = D");
  dih->add_option("--rep", rep, "irr (2n-dimensional) or perm (p-dimensional)")
      ->check(CLI::IsMember({"irr", "perm"}));
  dih->add_option("--pattern", pattern, "Generator assignment for presets, e.g. XYX");

  auto* bin = app.add_subcommand("binary-dihedral", "Total twisted polynomial for the binary dihedral representation");
  bin->add_option("knot", knot_text)->required();
  bin->add_option("-p", p)->required();
  bin->add_option("--pattern", pattern);

  auto* meta = app.add_subcommand("metacyclic", "Totals for the metacyclic group N(q,p)");
  meta->add_option("knot", knot_text)->required();
  meta->add_option("-p", p)->required();
  meta->add_option("-q", q)->required();
  meta->add_option("--rep", rep, "irr (primitive 2q-th roots) or max (2pq-dimensional)")
      ->check(CLI::IsMember({"irr", "max"}));
  meta->add_option("--pattern", pattern);

  auto* km = app.add_subcommand("kmeta", "K-metacyclic representation");
  km->add_option("knot", knot_text);
  km->add_option("--preset", preset_name);
  km->add_option("-p", p)->required();
  km->add_option("-k", k)->required();
  km->add_option("--pattern", pattern);

  HpBounds bounds;
  auto* hp = app.add_subcommand("hp-test", "Search for an H(p) continued fraction");
  hp->add_option("knot", knot_text)->required();
  hp->add_option("-p", p)->required();
  hp->add_option("--max-k", bounds.max_k);
  hp->add_option("--max-m", bounds.max_m);
  hp->add_option("--max-length", bounds.max_length);

  std::string suite_name;
  verify::Options vopts;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite_name)->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--max-n", vopts.max_n, "appendix: largest n; census: largest alpha");
  ver->add_option("--seed", vopts.seed);
  ver->add_option("--jobs", vopts.jobs)->check(CLI::PositiveNumber);
  ver->add_option("--samples", vopts.samples, "census sample count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  Printer pr{out, format == "json"};
  try {
    if (*alex) {
      const Knot kn = resolve(knot_text);
      guard(kn, 1);
      pr.value("knot", kn.text);
      pr.poly("alexander", alexander(kn.pres));
    } else if (*dih) {
      const Knot kn = resolve(knot_text);
      pr.value("knot", kn.text);
      pr.value("p", p);
      if (rep == "perm" || !kn.fraction) {
        if (factor) throw UsageError("--factor needs a two-bridge fraction and --rep irr");
        guard(kn, p);
        with_pattern(kn.pres, pattern, [&](const std::string& pat) {
          const IntPoly total = kn.fraction && pattern.empty() ? perm_dihedral_total(*kn.fraction, p)
                                                               : perm_dihedral_total(kn.pres, p, pat);
          if (!kn.fraction) pr.value("pattern", pat);
          pr.poly("total", total);
          return 0;
        });
      } else {
        const TwoBridgeFraction& f = *kn.fraction;
        guard(kn, p - 1);
        if (!factor) {
          pr.poly("D", dihedral_total(f, p));
        } else {
          const ConjectureReport r = conjecture_report(f, p);
          pr.poly("D", r.D);
          pr.opt_poly("F", r.F);
          pr.poly("q", r.q);
          pr.opt_poly("f", r.f);
          pr.flag("split", r.split);
          pr.value("hp", r.hp);
          pr.flag("modp", r.modp);
          if (r.torus_prediction) pr.flag("torus_prediction", *r.torus_prediction);
          else if (pr.as_json) pr.doc["torus_prediction"] = nullptr;
          if (!r.failure.empty() && !pr.as_json) pr.value("note", r.failure);
        }
      }
    } else if (*bin) {
      const Knot kn = resolve(knot_text);
      guard(kn, 2 * (p - 1));
      pr.value("knot", kn.text);
      pr.value("p", p);
      if (kn.fraction && pattern.empty()) {
        const BinaryDihedralResult r = binary_dihedral_total(*kn.fraction, p);
        pr.poly("total", r.total);
        pr.poly("over_i", r.over_i);
        pr.flag("cross_check", r.cross_check);
        if (!r.cross_check) throw CrossCheckMismatch("binary dihedral: the product over +-i differs");
      } else {
        with_pattern(kn.pres, pattern, [&](const std::string& pat) {
          const IntPoly total = binary_dihedral_total(kn.pres, p, pat);
          pr.value("pattern", pat);
          pr.poly("total", total);
          return 0;
        });
      }
    } else if (*meta) {
      const Knot kn = resolve(knot_text);
      pr.value("knot", kn.text);
      pr.value("p", p);
      pr.value("q", q);
      pr.value("rep", rep);
      if (rep == "irr") {
        guard(kn, 2 * q * (p - 1));
        pr.poly("total", metacyclic_total(need_fraction(kn, "metacyclic --rep irr"), q, p));
      } else if (kn.fraction && pattern.empty()) {
        guard(kn, 2 * p * q);
        const NqpResult r = nqp_total(*kn.fraction, q, p);
        pr.poly("total", r.direct);
        pr.poly("product_formula", r.product_formula);
        pr.flag("match", r.match);
        pr.flag("exponents_divisible", r.exponents_divisible);
      } else {
        guard(kn, 2 * p * q);
        with_pattern(kn.pres, pattern, [&](const std::string& pat) {
          const IntPoly total = nqp_total(kn.pres, q, p, pat);
          pr.value("pattern", pat);
          pr.poly("total", total);
          return 0;
        });
      }
    } else if (*km) {
      if (knot_text.empty() == preset_name.empty()) throw UsageError("kmeta needs exactly one of <knot> or --preset");
      if (!preset_name.empty() && !has_preset(preset_name)) throw UsageError("unknown preset " + preset_name);
      const Knot kn = resolve(preset_name.empty() ? knot_text : preset_name);
      guard(kn, p);
      with_pattern(kn.pres, pattern, [&](const std::string& pat) {
        const KmetaReport r = kmeta_total(kn.pres, p, k, pat);
        pr.value("knot", kn.text);
        pr.value("p", p);
        pr.value("k", k);
        pr.value("pattern", pat);
        pr.value("sigma_x", r.sigma_x);
        pr.value("sigma_y", r.sigma_y);
        pr.poly("twisted", r.twisted);
        pr.poly("alexander", r.alexander);
        pr.opt_poly("quotient", r.quotient);
        pr.value("order", r.order);
        pr.flag("periodic_quotient", r.periodic_quotient);
        return 0;
      });
    } else if (*hp) {
      const Knot kn = resolve(knot_text);
      const TwoBridgeFraction& f = need_fraction(kn, "hp-test");
      require_divides(p, f);
      const auto direct = hp_expansion(f, p, bounds);
      const auto member = hp_member(f, p, bounds);
      pr.value("knot", kn.text);
      pr.value("p", p);
      pr.value("hp", std::string(member ? "yes" : "inconclusive"));
      if (direct) pr.value("expansion", direct->to_string());
      else if (pr.as_json) pr.doc["expansion"] = nullptr;
      if (member) {
        pr.value("witness_fraction", member->fraction.get_str());
        pr.value("witness_expansion", member->expansion.to_string());
      }
    } else if (*ver) {
      const auto items = verify::suite(suite_name, vopts);
      const auto results = verify::run(*items, vopts.jobs);
      const bool ok = verify::all_pass(results);
      if (pr.as_json) {
        json list = json::array();
        for (const auto& r : results)
          list.push_back({{"name", r.name}, {"pass", r.pass}, {"report_only", r.report_only}, {"detail", r.detail}});
        pr.doc["suite"] = suite_name;
        pr.doc["results"] = list;
        pr.doc["pass"] = ok;
      } else {
        long passed = 0, failed = 0, noted = 0;
        for (const auto& r : results) {
          const char* tag = r.pass ? "PASS" : r.report_only ? "NOTE" : "FAIL";
          (r.pass ? passed : r.report_only ? noted : failed)++;
          out << tag << "  " << r.name;
          if (!r.detail.empty()) out << "  (" << r.detail << ")";
          out << '\n';
        }
        out << suite_name << ": " << passed << " passed, " << failed << " failed";
        if (noted > 0) out << ", " << noted << " reported";
        out << '\n';
      }
      pr.finish();
      return ok ? kOk : kInternal;
    }
    pr.finish();
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegreeGuard& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CertificateFailure& e) {
    err << "internal certificate failure: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace talex::cli
