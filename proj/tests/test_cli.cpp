#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "ges/json_io.hpp"
#include "helpers.hpp"

using namespace ges;
using namespace ges::test;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/ges_cli_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("construct emits valid subspaces and validates parameters") {
  RunResult r = run("construct ges3qubit --lambda 0.5,0.5,0.5");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  Subspace w = subspace_from_json(j);
  CHECK(w.dimension() == 3);
  CHECK(j.at("seed").get<uint64_t>() == 1);

  CHECK(run("construct antisym --d 3").exit_code == 0);
  Json anti = Json::parse(run("construct antisym --d 3").out);
  CHECK(subspace_from_json(anti).dimension() == 3);

  CHECK(run("construct ces3x3 --lambda 1.5,0.5,0.5,0.5").exit_code == 2);
  CHECK(run("construct no-such-family").exit_code == 2);
  CHECK(run("construct ges3qubit --lambda 0.5").exit_code == 2);
}

TEST_CASE("construct exact emits rational amplitudes") {
  RunResult r = run("construct ges3qubit --exact --ratios 1:1,1:2,2:3");
  REQUIRE(r.exit_code == 0);
  ExactSubspace w = exact_subspace_from_json(Json::parse(r.out));
  CHECK(w.dimension() == 3);
}

TEST_CASE("fixed seed gives byte-identical output") {
  std::string cmd = "certify --in " +
                    tmp_file("hw.json", to_json(hw_ges()).dump()) +
                    " --restarts 40 --seed 7";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("certify pipeline on the holevo-werner subspace") {
  std::string path = tmp_file("hw2.json", to_json(hw_ges()).dump());
  RunResult r = run("certify --in " + path + " --restarts 80");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("ges").get<bool>());
  REQUIRE(j.at("certificates").size() == 3);
  for (const Json& c : j.at("certificates")) {
    CHECK(c.at("verdict") == "entangled");
    CHECK(c.at("lambda1").get<double>() <= 0.5 + 1e-6);
  }
}

TEST_CASE("certify reports products and exact modes") {
  // span{|00>,|11>} (x) anything is not a valid 3-party GES input; use the
  // 3-party span{|110>, |001>} instead
  Dims d({2, 2, 2});
  Subspace prod = Subspace::make(
      d, {state_of(d, {{1.0, {1, 1, 0}}}), state_of(d, {{1.0, {0, 0, 1}}})});
  std::string path = tmp_file("prod.json", to_json(prod).dump());
  RunResult r = run("certify --in " + path + " --restarts 30");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK_FALSE(j.at("ges").get<bool>());

  // exact input file picks the exact route automatically
  std::string epath = tmp_file("exact.json",
                               to_json(ges_3qubit_exact({{{1, 1}, {1, 1}, {1, 1}}})).dump());
  RunResult re = run("certify --in " + epath);
  REQUIRE(re.exit_code == 0);
  Json je = Json::parse(re.out);
  CHECK(je.at("ges").get<bool>());
  for (const Json& c : je.at("certificates")) {
    CHECK(c.at("mode") == "exact");
    CHECK(c.at("groebner") == "{1} on all charts");
  }

  // exact mode on float amplitudes is refused
  std::string fpath = tmp_file("float.json", to_json(hw_ges()).dump());
  CHECK(run("certify --in " + fpath + " --mode exact").exit_code == 2);
}

TEST_CASE("measure command") {
  std::string ghz = tmp_file("ghz.json", to_json(ghz3()).dump());
  RunResult r = run("measure --in " + ghz + " --measure geometric --gme");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("value").get<double>() == doctest::Approx(0.5).epsilon(1e-9));

  RunResult rc = run("measure --in " + ghz + " --measure concurrence --cut 0");
  CHECK(Json::parse(rc.out).at("value").get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(run("measure --in " + ghz + " --measure no-such").exit_code == 2);
  CHECK(run("measure --in /tmp/ges_no_such_file.json").exit_code == 2);
}

TEST_CASE("channel pipeline composes through stdin") {
  RunResult r = run("channel holevo-werner --d 3 | " GES_CLI_PATH
                    " channel max-norm --p 2 --restarts 40");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("value").get<double>() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));

  RunResult inf = run("channel holevo-werner --d 3 | " GES_CLI_PATH
                      " channel max-norm --p inf --restarts 40");
  CHECK(Json::parse(inf.out).at("value").get<double>() == doctest::Approx(0.5).epsilon(1e-4));

  RunResult v = run("channel holevo-werner --d 4 | " GES_CLI_PATH " channel validate");
  Json jv = Json::parse(v.out);
  CHECK(jv.at("trace_preserving").get<bool>());
  CHECK(jv.at("kraus_count").get<int>() == 6);
}

TEST_CASE("bound command reproduces the projector bound") {
  Subspace s = hw_ges();
  DensityMatrix rho = random_density_in_span(s, 12);
  std::string rpath = tmp_file("rho.json", to_json(rho).dump());
  std::string spath = tmp_file("s.json", to_json(s).dump());
  RunResult r = run("bound --rho " + rpath + " --subspace " + spath + " --g 0.5");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("negativity_lb").get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(j.at("robustness_white").get<double>() == doctest::Approx(0.5625));
}

TEST_CASE("robustness command") {
  std::string spath = tmp_file("s2.json", to_json(hw_ges()).dump());
  RunResult r = run("robustness --subspace " + spath + " --g 0.5");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("robustness_white").get<double>() == doctest::Approx(0.5625));
}

TEST_CASE("lift is gated on output purity") {
  std::string sub = tmp_file("anti.json", to_json(antisymmetric_subspace(3)).dump());
  std::string hw = tmp_file("hwch.json", to_json(holevo_werner(3)).dump());
  RunResult ok = run("construct lift --subspace " + sub + " --channel " + hw +
                     " --party 1 --restarts 20");
  REQUIRE(ok.exit_code == 0);
  CHECK(subspace_from_json(Json::parse(ok.out)).dims == Dims({3, 3, 3}));

  // a unitary channel has output purity one and is rejected
  KrausChannel unitary = KrausChannel::make(3, 3, {Matrix::Identity(3, 3)});
  std::string upath = tmp_file("unitary.json", to_json(unitary).dump());
  CHECK(run("construct lift --subspace " + sub + " --channel " + upath +
            " --party 1 --restarts 8").exit_code == 2);
}

TEST_SUITE_END();
