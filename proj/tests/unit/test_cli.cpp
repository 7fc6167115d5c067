#include "gospace/cli.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace gospace;
using testsupport::catalog;
using testsupport::load;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli exit codes and verdicts") {
  const Run su2 = run_cli({"check-go", catalog("su2-123")});
  CHECK(su2.code == exit_refuted);
  const Json j = Json::parse(su2.out);
  CHECK(j["mode"] == "refuted");
  CHECK(j["witness"] == Json::array({"1", "1", "0"}));
  CHECK(j["ranks"]["augmented"].get<int>() == j["ranks"]["coefficient"].get<int>() + 1);
  // key order is fixed
  std::vector<std::string> keys;
  for (const auto &[k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"space", "mode", "witness", "ranks", "samples"});

  const Run heis = run_cli({"check-go", catalog("heisenberg-wsym")});
  CHECK(heis.code == exit_ok);
  CHECK(Json::parse(heis.out)["graph_map"] == Json::parse(R"([["0","0","1"]])"));

  CHECK(run_cli({"family-verify", catalog("sphere-family")}).code == exit_ok);
  CHECK(run_cli({"validate", testsupport::fixture("jacobi-fail")}).code == exit_input_error);
  CHECK(run_cli({"check-go", catalog("sphere2"), "--samples", "0"}).code == exit_input_error);
  CHECK(run_cli({}).code == exit_input_error);
}

TEST_CASE("validate reports witnesses") {
  const Run r = run_cli({"validate", testsupport::fixture("jacobi-fail")});
  const Json j = Json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["failures"][0]["check"] == "jacobi");
  CHECK(j["failures"][0]["witness"] == Json::array({0, 1, 2}));
}

TEST_CASE("check-go modes") {
  const Json cert = Json::parse(run_cli({"check-go", catalog("su2-123"), "--mode", "certify"}).out);
  CHECK(cert["mode"] == "inconclusive");
  const Json sampled =
      Json::parse(run_cli({"check-go", catalog("sphere2"), "--mode", "sample", "--samples", "50", "--seed", "4"}).out);
  CHECK(sampled["mode"] == "sampled_consistent");
  CHECK(sampled["samples"]["tested"] == 50);
  CHECK(sampled["samples"]["seed"] == 4);
  const Json refute = Json::parse(run_cli({"check-go", catalog("sphere2"), "--mode", "refute"}).out);
  CHECK(refute["mode"] == "sampled_consistent");
  CHECK(refute["samples"]["failed"] == 0);
}

TEST_CASE("check-natred, invariants and commutators reports") {
  const Run nat = run_cli({"check-natred", catalog("heisenberg-wsym")});
  CHECK(nat.code == exit_refuted);
  const Json n = Json::parse(nat.out);
  CHECK(n["witness"] == Json::array({0, 1, 2}));
  CHECK(n["crown_natred"] == false);
  CHECK(n["consistent"] == true);

  const Json inv = Json::parse(run_cli({"invariants", catalog("sphere2"), "--max-degree", "4"}).out);
  CHECK(inv["dims"] == Json::array({1, 0, 1, 0, 1}));
  CHECK(inv["crown_dims"] == inv["dims"]);
  CHECK(inv["bases"][2][0] == "e0^2 + e1^2");

  const Json comm = Json::parse(run_cli({"commutators", catalog("sphere2")}).out);
  CHECK(comm["degree_cap"] == 4);
  CHECK(comm["refutations"].empty());
  CHECK(comm["crown_consistent"] == true);
}

TEST_CASE("complexify output is a loadable gaussian space") {
  const Run r = run_cli({"complexify", catalog("sphere2")});
  CHECK(r.code == exit_ok);
  const ReductiveSpace crown = space_from_json(Json::parse(r.out));
  CHECK(crown.field() == Field::gaussian);
  CHECK(validate(crown).ok());
  // a crown of a crown is an input error
  CHECK(cmd_check_natred(crown).exit_code == exit_ok);
  CHECK_THROWS(cmd_complexify(crown));
}

TEST_CASE("analyze is the composition of the individual commands") {
  for (const char *name : {"sphere2", "su2-123", "heisenberg-wsym"}) {
    CAPTURE(name);
    const ReductiveSpace s = load(name);
    const FamilyOptions o;
    const Json a = Json::parse(run_cli({"analyze", catalog(name)}).out);
    CHECK(a["validation"] == cmd_validate(s).report);
    CHECK(a["go"] == cmd_check_go(s, GoMode::auto_mode, o.go).report);
    CHECK(a["natred"] == cmd_check_natred(s).report);
    CHECK(a["invariants"] == cmd_invariants(s, 4).report);
    CHECK(a["commutators"] == cmd_commutators(s, 4).report);
  }
}

TEST_CASE("same seed gives byte-identical output") {
  for (const char *cmd : {"analyze", "sample-omega"}) {
    const Run a = run_cli({cmd, catalog("su2-berger"), "--seed", "7"});
    const Run b = run_cli({cmd, catalog("su2-berger"), "--seed", "7"});
    CHECK(a.out == b.out);
  }
}
