#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "talex/golden.hpp"
#include "talex/json_io.hpp"

using namespace talex;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = invoke(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("alexander prints signed terms") {
  const Run r = invoke({"alexander", "1/3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alexander = 1 - t + t^2") != std::string::npos);
}

TEST_CASE("dihedral factorization in json") {
  const auto j = invoke_json({"dihedral", "5/27", "-p", "3", "--factor"});
  for (const char* key : {"D", "F", "q", "f", "split", "hp", "modp", "torus_prediction"}) CHECK(j.contains(key));
  const IntPoly d = poly_from_json(j["D"]), f = poly_from_json(j["F"]);
  CHECK(d == canonical(golden::dihedral()[2].expected));
  CHECK(canonical(f * f.negate_t()) == d);
  CHECK(j["split"] == true);
}

TEST_CASE("emitted polynomial json round-trips") {
  const auto j = invoke_json({"dihedral", "19/85", "-p", "5", "--factor"});
  for (const char* key : {"D", "F", "q", "f"}) {
    CAPTURE(key);
    CHECK(poly_to_json(canonical(poly_from_json(j[key]))) == j[key]);
  }
}

TEST_CASE("metacyclic maximal representation") {
  const auto j = invoke_json({"metacyclic", "1/3", "-p", "3", "-q", "4", "--rep", "max"});
  CHECK(poly_from_json(j["total"]) == canonical(golden::nqp()[0].expected));
  CHECK(j["match"] == true);
}

TEST_CASE("kmeta preset") {
  const auto j = invoke_json({"kmeta", "--preset", "8_5", "-p", "7", "-k", "-2"});
  CHECK(poly_from_json(j["quotient"]) == canonical(golden::kmeta().back().f));
  CHECK(j["periodic_quotient"] == true);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"nonsense"}).code == cli::kUsage);
  CHECK(invoke({"dihedral", "abc", "-p", "3"}).code == cli::kUsage);
  CHECK(invoke({"dihedral", "1/3"}).code == cli::kUsage);
  CHECK(invoke({"verify", "everything"}).code == cli::kUsage);
  CHECK(invoke({"dihedral", "1/5", "-p", "3"}).code == cli::kPrecondition);
  CHECK(invoke({"dihedral", "1/9", "-p", "9"}).code == cli::kPrecondition);
  CHECK(invoke({"kmeta", "1/3", "-p", "7", "-k", "1"}).code == cli::kPrecondition);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("factoring outside H(p) is a finding, not an error") {
  const auto j = invoke_json({"dihedral", "2/5", "-p", "5", "--factor"});
  CHECK(j["split"] == false);
  CHECK(j["hp"] == "inconclusive");
  CHECK(j["f"].is_null());
}

TEST_CASE("degree guard") {
  ::setenv("TALEX_MAX_DEGREE", "50", 1);
  CHECK(invoke({"dihedral", "19/85", "-p", "5"}).code == cli::kPrecondition);
  CHECK(invoke({"alexander", "1/3"}).code == cli::kOk);
  ::setenv("TALEX_MAX_DEGREE", "many", 1);
  CHECK(invoke({"alexander", "1/3"}).code == cli::kUsage);
  ::unsetenv("TALEX_MAX_DEGREE");
}

TEST_CASE("hp-test") {
  const auto j = invoke_json({"hp-test", "19/85", "-p", "5"});
  CHECK(j["hp"] == "yes");
  CHECK(j["expansion"].is_string());
}

TEST_CASE("verify output does not depend on --jobs") {
  const Run a = invoke({"verify", "appendix", "--max-n", "6", "--format", "json"});
  const Run b = invoke({"verify", "appendix", "--max-n", "6", "--jobs", "4", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["pass"] == true);
}
