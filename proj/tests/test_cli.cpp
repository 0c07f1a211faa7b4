#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli.hpp"
#include "nilharm/algebra_json.hpp"
#include "nilharm/catalog.hpp"
#include "nilharm/config.hpp"
#include "nilharm/error.hpp"

using namespace nilharm;
using cli::Status;

namespace {

cli::CommandResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return cli::run(args);
}

std::string temp_path(const std::string& name) { return std::string(P_tmpdir) + "/nilharm_test_" + name; }

}  // namespace

TEST_CASE("config defaults, overrides, validation") {
  auto c = Config::defaults();
  auto q = c.quadrature();
  CHECK(q.rule == QuadratureRule::GaussHermite);
  CHECK(q.initial_nodes == 4);
  CHECK(q.rel_tol == 1e-8);
  c.set("quadrature.rule", "gauss-legendre");
  c.set("stepwise.inner_node_budget", "5000");
  CHECK(c.quadrature().rule == QuadratureRule::GaussLegendre);
  CHECK(c.inner_quadrature().node_budget == 5000);
  CHECK_THROWS_AS(c.set("quadrature.nodes", "3"), InvalidInput);
  CHECK_THROWS_AS(c.set("quadrature.rel_tol", "fast"), InvalidInput);
  CHECK_THROWS_AS(c.set("quadrature.initial_nodes", "-2"), InvalidInput);
  CHECK_THROWS_AS(c.set("quadrature.rule", "midpoint"), InvalidInput);
  CHECK(c.to_json()["quadrature.rule"] == "gauss-legendre");

  auto path = temp_path("conf");
  {
    std::ofstream out(path);
    out << "# comment\n\nquadrature.rel_tol = 1e-6\n";
  }
  CHECK(Config::load(path).quadrature().rel_tol == 1e-6);
  {
    std::ofstream out(path);
    out << "quadrature.rel_tol 1e-6\n";
  }
  CHECK_THROWS_AS(Config::load(path), InvalidInput);
  std::remove(path.c_str());
  CHECK_THROWS_AS(Config::load(temp_path("missing")), InvalidInput);
}

TEST_CASE("algebra and case names") {
  CHECK(cli::parse_algebra("heisenberg:2:H").dim() == 11);
  CHECK(cli::parse_algebra("free2step:4:R").dim() == 10);
  CHECK(cli::parse_algebra("octdouble").dim() == 14);
  CHECK(cli::parse_algebra("abelian:3").dim() == 3);
  CHECK(cli::parse_algebra("catalog:2.1:1:3").dim() == 6);
  CHECK_THROWS_AS(cli::parse_algebra("catalog:2.1:13"), BracketNotSpecified);
  CHECK_THROWS_AS(cli::parse_algebra("lie:3"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_algebra("heisenberg:x:C"), InvalidInput);
  CHECK(cli::parse_case("case6:5").l2_indices.size() == 2);
  CHECK(cli::parse_case("case3").algebra.dim() == 14);
  CHECK_THROWS_AS(cli::parse_case("case4"), InvalidInput);

  auto path = temp_path("alg.json");
  {
    std::ofstream out(path);
    out << algebra_to_json(heisenberg(1, CompositionKind::C)).dump();
  }
  CHECK(cli::parse_algebra("file:" + path).brackets() == heisenberg(1, CompositionKind::C).brackets());
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(Status::ok) == 0);
  CHECK(cli::exit_code(Status::check_failed) == 1);
  CHECK(cli::exit_code(Status::error) == 2);
  CHECK(run({"bogus"}).status == Status::error);
  CHECK(run({"check", "catalog:2.1:13"}).status == Status::error);
  CHECK(run({"--set", "quadrature.rel_tol=abc", "check", "abelian:2"}).status == Status::error);
  CHECK(run({"orbit", "case1", "--lambda", "1,2"}).status == Status::error);
}

TEST_CASE("check, pfaffian, classify") {
  auto c = run({"check", "heisenberg:1:H"});
  CHECK(c.status == Status::ok);
  auto p = run({"pfaffian", "heisenberg:1:C"});
  CHECK(p.payload["pf"] == "-z1");
  CHECK(p.payload["degree"] == 1);
  auto k = run({"classify", "free2step:3:R"});
  CHECK(k.payload["square_integrable"] == false);
  CHECK(k.payload["stepwise_split_found"] == true);
  CHECK(k.payload["l2"] == nlohmann::json::array({"u1"}));
  CHECK(run({"classify", "heisenberg:1:O"}).payload["square_integrable"] == true);
}

TEST_CASE("orbit and decompose") {
  auto o = run({"orbit", "case1:4", "--lambda", "3,0,0,0,0,1"});
  REQUIRE(o.status == Status::ok);
  CHECK(o.payload["invariants"] == nlohmann::json::array({1.0, 3.0}));
  CHECK(o.payload["principal"] == "not decided");
  auto d = run({"decompose", "case1", "--verify"});
  CHECK(d.status == Status::ok);
  CHECK(d.payload["l2_labels"] == nlohmann::json::array({"u3"}));
  CHECK(d.payload["verification"]["l1_is_ideal"] == true);
}

TEST_CASE("invert is reproducible") {
  std::vector<std::string> args{"invert", "heisenberg:1:C", "--function", "gaussian", "--points", "origin;0.5,0,1"};
  auto a = run(args), b = run(args);
  REQUIRE(a.status == Status::ok);
  CHECK(cli::dump(a.payload) == cli::dump(b.payload));
  CHECK(a.payload["formula"] == "flat");
  CHECK(a.payload["records"].size() == 2);
  for (const auto& r : a.payload["records"]) CHECK(r["rel_error"].get<double>() < 1e-8);
  CHECK(a.payload.count("wall_seconds") == 0);
  // an impossible acceptance threshold turns into a failed check
  args.insert(args.end(), {"--accept", "1e-30"});
  auto strict = run(args);
  CHECK(strict.status == Status::check_failed);
}

TEST_CASE("dump format") {
  nlohmann::json j = {{"b", 0.1}, {"a", 1}};
  CHECK(cli::dump(j) == "{\n  \"a\": 1,\n  \"b\": 0.10000000000000001\n}");
}
