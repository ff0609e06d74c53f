#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "stab/cli.hpp"

using stab::run;

namespace {

std::string temp_file(const std::string& body) {
  static int counter = 0;
  std::string path = "stab_cli_test_" + std::to_string(counter++) + ".txt";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("stable verdicts and exit codes") {
  auto r = run({"stable", "exp(x^2)"});
  CHECK(r.exit_code == 0);
  CHECK(r.output["verdict"] == "not_stable");
  CHECK(r.output["obstruction"]["kind"] == "degree_drop");

  r = run({"stable", "log(log(x))"});
  CHECK(r.exit_code == 1);
  CHECK(r.output["verdict"] == "out_of_fragment");

  r = run({"stable", "x +"});
  CHECK(r.exit_code == 2);
  CHECK(r.output["status"] == "error");
  CHECK(r.output["error"] == "SyntaxError");

  r = run({"stable", "--depth", "10", "x^3*exp(2*x)"});
  CHECK(r.exit_code == 0);
  CHECK(r.output["verdict"] == "stable");
  CHECK(r.output["witness_chain"].size() == 10);
  CHECK(r.output["chain_verified"] == true);

  r = run({"stable", "--derivation", "euler", "1+x"});
  CHECK(r.output["verdict"] == "not_stable");
  CHECK(r.output["obstruction"]["kind"] == "constant_term");
  CHECK(r.output["field"] == "rational");

  r = run({"stable", "--field", "rational", "1/x"});
  CHECK(r.output["obstruction"]["kind"] == "moment_index");
  CHECK(r.output["obstruction"]["index"] == 0);

  CHECK(run({"stable", "--derivation", "bogus", "x"}).exit_code == 2);
  CHECK(run({"nonsense"}).exit_code == 2);
}

TEST_CASE("witness and moments") {
  auto r = run({"witness", "--depth", "2", "x^2"});
  CHECK(r.output["witness_chain"] == nlohmann::json({"1/3*x^3", "1/12*x^4"}));
  r = run({"witness", "-k", "3", "exp(2*x)"});
  CHECK(r.output["witness_chain"] == nlohmann::json({"1/2*exp(2*x)", "1/4*exp(2*x)", "1/8*exp(2*x)"}));
  r = run({"witness", "exp(x^2)"});
  CHECK(r.exit_code == 0);
  CHECK(r.output["verdict"] == "not_stable");
  CHECK_FALSE(r.output.contains("witness_chain"));
  CHECK(run({"moments", "-N", "5", "1/x^2"}).output["obstruction_index"] == 1);
  CHECK(run({"moments", "-N", "5", "x^3+2"}).output["obstruction_index"].is_null());
}

TEST_CASE("integrate commands") {
  auto r = run({"skolem", "--max", "12", "exp(x^2)"});
  CHECK(r.exit_code == 0);
  CHECK(r.output["integrable_indices"] == nlohmann::json({1, 3, 5, 7, 9, 11}));
  CHECK(run({"skolem", "--serial", "--max", "12", "exp(x^2)"}).output["integrable_indices"] == r.output["integrable_indices"]);
  CHECK(run({"skolem", "--max", "6", "exp(x^2)"}).output["integrable_indices"] == nlohmann::json({1, 3, 5}));
  CHECK(run({"integrable", "1/x^2"}).output["antiderivative"] == "-1/x");
  CHECK(run({"integrable", "1/x"}).output["integrable"] == false);
  CHECK(run({"lh", "1/x"}).output["of_form"] == true);
  CHECK(run({"dred", "2*x/(x^2+1)"}).output["differential_reduced"] == false);
  CHECK(run({"risch", "1", "2*x", "1", "--m", "0"}).output["solved"] == false);
  CHECK(run({"skolem", "--max", "3", "exp(log(x))"}).exit_code != 0);
}

TEST_CASE("ore and dfinite commands") {
  CHECK(run({"ore", "mul", "D", "x"}).output["result"] == "x*D + 1");
  CHECK(run({"ore", "gcrd", "D^2-1", "D-1"}).output["result"] == "D - 1");
  CHECK(run({"ore", "apply", "x*D", "x^3"}).output["result"] == "3*x^3");
  CHECK(run({"ore", "apply", "S-1", "0,1,4,9,16", "--kind", "shift"}).output["result"] ==
        nlohmann::json({"1", "3", "5", "7"}));
  CHECK(run({"dfinite", "convert", "d2s", "D-1"}).output["result"] == "(n + 1)*S - 1");
  auto g = run({"dfinite", "guess", "exp", "-T", "40"});
  CHECK(g.output["annihilator"] == "D - 1");
  auto c = run({"dfinite", "certify", "exp"});
  CHECK(c.exit_code == 0);
  CHECK(c.output["m"] == 1);
  CHECK(c.output["stable_order"] == 2);
  auto p = run({"dfinite", "certify", "poly:x"});
  CHECK(p.output["m"] == 0);
  CHECK(p.output["stable_order"] == 1);
  auto f = run({"dfinite", "certify", "exp", "--max-m", "0"});
  CHECK(f.exit_code == 1);
  CHECK(f.output["error"] == "NoCertificateWithinLimits");
}

TEST_CASE("dynsys commands") {
  auto path = temp_file(R"({"elements": ["a", "b", "c"], "map": {"a": "b", "b": "a", "c": "a"}})");
  auto r = run({"dynsys", "analyze", path});
  CHECK(r.exit_code == 0);
  CHECK(r.output["stab"] == nlohmann::json({"a", "b"}));
  CHECK(r.output["attrac"] == nlohmann::json({"a", "b"}));
  std::remove(path.c_str());
  auto g = run({"dynsys", "godelle", "-N", "3", "-M", "3"});
  CHECK(g.output["attrac"] == nlohmann::json({"(-3,0)"}));
  CHECK(run({"dynsys", "godelle", "-N", "0", "-M", "3"}).exit_code == 2);
  CHECK(run({"dynsys", "analyze", "missing.json"}).exit_code == 2);
}

TEST_CASE("batch") {
  auto three = temp_file("x^2\nlog(x)/x\nx^3*exp(2*x)\n");
  auto r = run({"batch", three});
  CHECK(r.exit_code == 0);
  CHECK(r.lines);
  REQUIRE(r.output.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(r.output[i]["verdict"] == "stable");
    CHECK(r.output[i]["line"] == i + 1);
  }
  auto bad = temp_file("x^2\nx +\nexp(x^2)\n");
  r = run({"batch", bad});
  CHECK(r.exit_code == 0);
  REQUIRE(r.output.size() == 3);
  CHECK(r.output[1]["status"] == "error");
  CHECK(r.output[2]["verdict"] == "not_stable");
  CHECK(run({"batch", "--serial", bad}).output == r.output);
  std::vector<std::string> many;
  for (int i = 0; i < 40; ++i) many.push_back(i % 3 ? "x^" + std::to_string(i) + "*exp(" + std::to_string(i % 5 + 1) + "*x)" : "log(x)/(x-" + std::to_string(i) + ")");
  CHECK(stab::run_batch(many, "ddx", "elementary", 3) == stab::run_batch_serial(many, "ddx", "elementary", 3));
  auto empty = temp_file("");
  r = run({"batch", empty});
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  for (const auto& p : {three, bad, empty}) std::remove(p.c_str());
}
