#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evogame/cli.hpp"
#include "evogame/io.hpp"
#include "golden.hpp"

using namespace evogame;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"evogame"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Fresh directory removed at scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("evogame_cli_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("stability command reports gamma4 as the only ESS") {
  const Run r = run({"stability", "--preset", "Condition1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ess"] == json::array({"gamma4"}));
}

TEST_CASE("stability command writes a file byte-identical to the golden report") {
  TempDir dir("stability");
  const Run r = run({"stability", "--preset", "Condition1", "--out", dir.file("r.json")});
  REQUIRE(r.code == 0);
  CHECK(testing::read_file(dir.file("r.json")) ==
        testing::read_file(testing::golden_path("condition1_report.json")));
}

TEST_CASE("simulate writes CSV, SVG and report") {
  TempDir dir("simulate");
  const Run r = run({"simulate", "--preset", "Condition3", "--out-csv", dir.file("c3.csv"),
                     "--out-svg", dir.file("c3.svg"), "--out-json", dir.file("c3.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("converged to gamma8") != std::string::npos);
  const auto samples = read_trajectory_csv(testing::read_file(dir.file("c3.csv")));
  REQUIRE(samples.size() == 20001);
  CHECK(max_norm_distance(samples.back().state, {1, 1, 1}) < 1e-3);
  CHECK(testing::read_file(dir.file("c3.svg")).find("<polyline") != std::string::npos);
  CHECK(json::parse(testing::read_file(dir.file("c3.json")))["ess"] == json::array({"gamma8"}));
}

TEST_CASE("simulate honours overrides, initial state and horizon") {
  TempDir dir("override");
  const Run r = run({"simulate", "--preset", "Condition1", "--param", "C_LF=20", "--initial",
                     "0.8,0.1,0.1", "--t-max", "1", "--out-csv", dir.file("a.csv")});
  REQUIRE(r.code == 0);
  const auto samples = read_trajectory_csv(testing::read_file(dir.file("a.csv")));
  REQUIRE(samples.size() == 101);
  CHECK(samples.front().state == StrategyState{0.8, 0.1, 0.1});
  ModelParams p = preset(ScenarioName::kCondition1).params;
  p.litigation_fisheries = 20;
  IntegratorConfig c;
  c.t_max = 1;
  const StrategyState expect = integrate(p, {0.8, 0.1, 0.1}, c).final_state();
  CHECK(max_norm_distance(samples.back().state, expect) < 1e-11);
}

TEST_CASE("simulate from a config file") {
  TempDir dir("config");
  const std::string csv = dir.file("golden.csv");
  std::ofstream(dir.file("run.json"))
      << R"({"preset":"Condition1","integrator":{"t_max":1},"outputs":{"csv":")" << csv << "\"}}";
  const Run r = run({"simulate", "--config", dir.file("run.json")});
  REQUIRE(r.code == 0);
  CHECK(testing::read_file(csv) == testing::read_file(testing::golden_path("condition1_t1.csv")));

  std::ofstream(dir.file("bad.json")) << R"({"preset":"Condition1","outputs":{}})";
  CHECK(run({"simulate", "--config", dir.file("bad.json")}).code == 2);
  CHECK(run({"simulate", "--config", dir.file("missing.json")}).code == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"stability", "--preset", "Nope"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"simulate", "--dt"}).code == 1);
  CHECK(run({"simulate", "--param", "C_XX=3"}).code == 1);
  CHECK(run({"simulate", "--param", "C_SJ"}).code == 1);
  CHECK(run({"sweep", "--name", "nope"}).code == 1);
  CHECK(run({"sweep", "--param-name", "C_DJ"}).code == 1);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
}

TEST_CASE("validation errors exit 2") {
  const Run r = run({"stability", "--param", "C_SJ=-5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("validation error") != std::string::npos);
  CHECK(run({"simulate", "--initial", "0.5,1.5,0.5"}).code == 2);
  CHECK(run({"simulate", "--dt", "0"}).code == 2);
}

TEST_CASE("numeric failures exit 3") {
  CHECK(run({"simulate", "--param", "C_SJ=1e6", "--dt", "1", "--t-max", "5"}).code == 3);
  CHECK(run({"sweep", "--name", "C_DJ", "--t-max", "0.1"}).code == 3);
}

TEST_CASE("payoff table") {
  const Run r = run({"payoff", "--preset", "Condition1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("japan,countries,fisheries,payoff_japan,payoff_countries,payoff_fisheries\n", 0) ==
        0);
  CHECK(r.out.find("-77,-21,35") != std::string::npos);
  CHECK(r.out.find("-9,0,-1") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 9);
}

TEST_CASE("equilibria listing") {
  const Run r = run({"equilibria", "--preset", "Condition2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("gamma6 (1,0,1)  pure  eigenvalues -1 -21 -21  signs ---  ESS") !=
        std::string::npos);
  CHECK(r.out.find("gamma9 interior  infeasible") != std::string::npos);
}

TEST_CASE("sweep writes per-variant artifacts") {
  TempDir dir("sweep");
  const Run r = run({"sweep", "--name", "C_DJ", "--out-dir", dir.file("out")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("all variants -> gamma4") != std::string::npos);
  CHECK(r.out.find("(forced)") != std::string::npos);
  for (int i = 0; i < 6; ++i) CHECK(fs::exists(dir.path / "out" / ("C_DJ_" + std::to_string(i) + ".csv")));
  CHECK(fs::exists(dir.path / "out" / "C_DJ.json"));
  for (const char* c : {"x", "y", "z"}) {
    CHECK(fs::exists(dir.path / "out" / (std::string("C_DJ_") + c + ".svg")));
  }
  const json j = json::parse(testing::read_file(dir.file("out/C_DJ.json")));
  CHECK(j.contains("reproduction_notes"));
}

TEST_CASE("custom parameter sweep") {
  const Run r = run({"sweep", "--param-name", "C_MJ", "--values", "2,6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sweep C_MJ: all variants -> gamma4") != std::string::npos);
}
