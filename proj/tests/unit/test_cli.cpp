#include "ahrg/driver.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace ahrg;

namespace {

std::string read_config(const std::string& name) {
  std::ifstream f(std::string(AHRG_TEST_CONFIGS) + "/" + name);
  REQUIRE(f);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Json base(const char* type, const char* lattice, const char* command) {
  return {{"root_datum", {{"type", type}, {"lattice", lattice}}}, {"command", command}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("describe") {
    Report r = run_text(read_config("describe_b2.json"));
    CHECK(r.ok);
    CHECK(r.json["result"]["nroots"] == 8);
    CHECK(r.json["result"]["weyl_order"] == 8);
    CHECK(r.json["command"] == "describe");
  }

  TEST_CASE("arthur-gram report") {
    Report r = run_text(read_config("arthur_gram_a1.json"));
    CHECK(r.ok);
    CHECK(r.json["result"]["rgroup_order"] == 2);
    CHECK(r.json["result"]["gram"] == Json::parse(R"([["1","-1"],["-1","1"]])"));
    REQUIRE(r.grams.size() == 1);
    CHECK(r.csv().rfind("# ", 0) == 0);
  }

  TEST_CASE("reports are deterministic") {
    std::string cfg = read_config("scan_a2.json");
    RunOptions one, three;
    three.jobs = 3;
    Report a = run_text(cfg, one), b = run_text(cfg, one), c = run_text(cfg, three);
    CHECK(a.ok);
    CHECK(a.json_text() == b.json_text());
    CHECK(a.json_text() == c.json_text());
    CHECK(a.csv() == c.csv());
  }

  TEST_CASE("config errors") {
    Json unknown = base("A1", "sc", "describe");
    unknown["colour"] = "red";
    CHECK_THROWS_AS(run(parse_config(unknown)), ConfigError);

    Json rational = base("A1", "adjoint", "arthur-gram");
    rational["datum"] = {{"P", Json::array()}, {"t", {{"torsion", {"1/x"}}}}};
    CHECK_THROWS_AS(run(parse_config(rational)), ConfigError);

    Json noninvariant = base("A2", "sc", "describe");
    noninvariant["parameters"] = {{"full", {{"a1", 2}, {"a2", 4}}}};
    CHECK_THROWS_AS(run(parse_config(noninvariant)), ConfigError);

    CHECK_THROWS_AS(run_text("{not json"), ConfigError);
    CHECK_THROWS_AS(run(parse_config(base("Z9", "sc", "describe"))), ConfigError);
    CHECK_THROWS_AS(run(parse_config(base("A1", "sc", "dance"))), ConfigError);
  }

  TEST_CASE("numeric-only requests in generic mode") {
    RunOptions generic;
    generic.mode = "generic";
    CHECK_THROWS_AS(run_text(read_config("hecke_end_a1.json"), generic), UnsupportedRequest);
    Report r = run_text(read_config("hecke_end_a1.json"));
    CHECK(r.ok);
    CHECK(r.json["result"]["commutant_dim"] == 2);
  }

  TEST_CASE("quick selftest") {
    Json cfg = base("A1", "sc", "selftest");
    cfg["options"] = {{"quick", true}};
    Report r = run(parse_config(cfg));
    CHECK(r.ok);
  }
}
