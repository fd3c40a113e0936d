#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "test_helpers.hpp"
#include "xsigma/cli.hpp"
#include "xsigma/compact.hpp"
#include "xsigma/report.hpp"

using namespace xsigma;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decide: frozen verdicts") {
  auto r = run_cli({"decide", "--type", "B3", "--weight", "1,0,0"});
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["normal"] == false);
  CHECK(d["smooth"] == false);
  CHECK(d["star"] == false);
  CHECK(d["little_brothers"] == json::parse("[[0,0,0]]"));

  r = run_cli({"decide", "--type", "A2", "--weight", "1,1"});
  REQUIRE(r.code == 0);
  d = json::parse(r.out);
  CHECK(d["normal"] == true);
  CHECK(d["q_factorial"]["value"] == true);
  CHECK(d["smooth"] == true);
  CHECK(d["timashev"]["iii"] == true);

  r = run_cli({"decide", "--type", "G2", "--weight", "0,2", "--sigma", "0,2;1,1"});
  REQUIRE(r.code == 0);
  d = json::parse(r.out);
  CHECK(d["normal"] == true);
  CHECK(d["sigma"].size() == 2);
}

TEST_CASE("decide: certificates on demand") {
  auto r = run_cli({"decide", "--type", "B3", "--weight", "1,0,1", "--certify"});
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  REQUIRE(d.contains("certificates"));
  CHECK(d["certificates"].size() >= 2);
  for (const auto& cert : d["certificates"]) {
    CHECK(cert["n"].get<int>() == cert["factors"].size());
    CHECK(cert["steps"].size() == cert["n"].get<int>() - 1);
  }
  // a non-normal input carries no certificates
  r = run_cli({"decide", "--type", "B3", "--weight", "1,0,0", "--certify"});
  REQUIRE(r.code == 0);
  CHECK(!json::parse(r.out).contains("certificates"));
}

TEST_CASE("decide: validation failures exit 2") {
  CHECK(run_cli({"decide", "--type", "B9000", "--weight", "1"}).code == 2);
  CHECK(run_cli({"decide", "--type", "C2", "--weight", "1,0"}).code == 2);
  CHECK(run_cli({"decide", "--type", "B3", "--weight", "1,0"}).code == 2);
  CHECK(run_cli({"decide", "--type", "B3", "--weight", "1,0,x"}).code == 2);
  CHECK(run_cli({"decide", "--type", "B3", "--weight", "-1,0,0"}).code == 2);
  CHECK(run_cli({"decide", "--type", "B3"}).code == 2);
  // incomparable sigma has no unique maximum
  CHECK(run_cli({"decide", "--type", "A2", "--weight", "1,0", "--sigma", "1,0;0,1"}).code == 2);
  // weight must be the maximum of sigma
  CHECK(run_cli({"decide", "--type", "B3", "--weight", "0,0,0", "--sigma", "1,0,0;0,0,0"}).code ==
        2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "everything"}).code == 2);
}

TEST_CASE("sweep: shapes and frozen rows") {
  auto b2 = run_cli({"sweep", "--type", "B2"});
  REQUIRE(b2.code == 0);
  std::istringstream lines(b2.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "type,support,star,normal,q_factorial,smooth,n_rays");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);

  auto a3 = run_cli({"sweep", "--type", "A3", "--out", "json"});
  REQUIRE(a3.code == 0);
  json rows_json = json::parse(a3.out);
  REQUIRE(rows_json.size() == 7);
  for (const auto& row : rows_json) {
    CHECK(row["normal"] == true);
    CHECK(row["star"] == true);
  }

  auto d4 = run_cli({"sweep", "--type", "D4", "--out", "json"});
  json d4rows = json::parse(d4.out);
  bool saw_a1 = false;
  for (const auto& row : d4rows) {
    if (row["support"] == "a1") {
      saw_a1 = true;
      CHECK(row["q_factorial"] == false);
      CHECK(row["n_rays"] == 5);
    }
  }
  CHECK(saw_a1);
}

TEST_CASE("sweep output is byte-stable") {
  CHECK(cli::sweep_table("B3", "json") == cli::sweep_table("B3", "json"));
  CHECK(cli::sweep_table("B3", "csv") == cli::sweep_table("B3", "csv"));
}

TEST_CASE("sweep booleans do not depend on the representative") {
  // replace the indicator by another weight with the same support
  for (const char* name : {"B3", "C3", "D4", "G2"}) {
    auto sys = rootsys::RootSystem::build(name);
    unsigned x = 0xc0ffee11u;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << sys->rank()); ++mask) {
      std::vector<int> ind(sys->rank(), 0), other(sys->rank(), 0);
      for (int i = 0; i < sys->rank(); ++i)
        if ((mask >> i) & 1) {
          ind[i] = 1;
          other[i] = 1 + static_cast<int>(x % 3);
          x = x * 1664525u + 1013904223u;
        }
      auto a = sys->weight(std::move(ind));
      auto b = sys->weight(std::move(other));
      CHECK(compact::satisfies_star(a) == compact::satisfies_star(b));
      CHECK(compact::is_q_factorial(a).value == compact::is_q_factorial(b).value);
      CHECK(compact::is_smooth(compact::SigmaSet::create({a})).value ==
            compact::is_smooth(compact::SigmaSet::create({b})).value);
      CHECK(compact::extremal_rays(a) == compact::extremal_rays(b));
    }
  }
}

TEST_CASE("decision report JSON shape") {
  auto sys = rootsys::RootSystem::build("B2");
  auto lambda = sys->fundamental_weight(0);
  auto report = report::build_decision_report(sys, lambda,
                                              compact::SigmaSet::create({lambda}), false);
  json d = json::parse(report::to_json_string(report));
  for (const char* key : {"type", "lambda", "sigma", "star", "little_brothers", "normal",
                          "q_factorial", "smooth", "extremal_rays", "timashev"})
    CHECK(d.contains(key));
  CHECK(d["type"] == "B2");
  CHECK(d["q_factorial"]["iii"].is_null());
  // ray indices are 1-based Bourbaki positions
  for (const auto& ray : d["extremal_rays"]) {
    CHECK(ray["index"].get<int>() >= 1);
    CHECK(ray["index"].get<int>() <= 2);
    CHECK((ray["kind"] == "coroot" || ray["kind"] == "neg_coweight"));
  }
}

TEST_CASE("reducible systems and the zero weight") {
  auto r = run_cli({"decide", "--type", "A2xB3", "--weight", "1,0,0,0,1"});
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["smooth"] == true);  // both factors smooth (A2 omega_1; B3 omega_3)

  r = run_cli({"decide", "--type", "A2xB3", "--weight", "0,0,1,0,0"});
  REQUIRE(r.code == 0);
  d = json::parse(r.out);
  CHECK(d["normal"] == false);  // B3 factor has a long support root, no alpha_S

  r = run_cli({"decide", "--type", "A2", "--weight", "0,0"});
  REQUIRE(r.code == 0);
  d = json::parse(r.out);
  CHECK(d["smooth"] == true);  // a point
  CHECK(d["extremal_rays"].empty());
}
