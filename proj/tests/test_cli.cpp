#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "vecgames/cli/commands.hpp"
#include "vecgames/indicators/indicators.hpp"
#include "vecgames/io/config.hpp"
#include "vecgames/io/pf_file.hpp"
#include "vecgames/learn/enumerate.hpp"
#include "vecgames/learn/weights.hpp"

using namespace vecgames;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("vecgames_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("ini parsing") {
  const IniFile ini = IniFile::parse(
      "# comment\n[experiment]\nenv = beach  # trailing\nseeds = 0:3\n\n"
      "[env]\nagents = 50\nratio = 0.25\nteam = true\nlist = 1,2.5,3\n");
  CHECK(ini.get("experiment", "env") == "beach");
  CHECK(ini.get_int("env", "agents", 0) == 50);
  CHECK(ini.get_double("env", "ratio", 0) == 0.25);
  CHECK(ini.get_bool("env", "team", false));
  CHECK(ini.get_doubles("env", "list") == std::vector<double>{1.0, 2.5, 3.0});
  CHECK(ini.get("env", "missing", "fallback") == "fallback");

  CHECK(parse_seeds("0:3") == std::vector<Seed>{0, 1, 2, 3});
  CHECK(parse_seeds("5, 9") == std::vector<Seed>{5, 9});
  CHECK_THROWS_AS(parse_seeds("9:5"), Error);
  CHECK_THROWS_AS(IniFile::parse("key value\n"), Error);
  CHECK_THROWS_AS(IniFile::parse("[unterminated\n"), Error);
}

TEST_CASE("environment factory covers all eight ids") {
  const IniFile empty = IniFile::parse("");
  for (const std::string& id : known_env_ids()) {
    if (is_board_env(id)) {
      CHECK(make_board_env(id, empty) != nullptr);
      CHECK_THROWS_AS(make_env(id, empty), Error);
    } else {
      CHECK(make_env(id, empty) != nullptr);
    }
  }
  CHECK(known_env_ids().size() == 8);
  CHECK_THROWS_AS(make_env("volleyball", empty), Error);
}

TEST_CASE("pf files round-trip losslessly") {
  PfFile pf;
  pf.env = "gem_mining";
  pf.algorithm = "decomposition";
  pf.seed = 3;
  pf.reference_point = {0.0, 0.0};
  pf.points = {{1.0 / 3.0, 0.7071067811865476}, {0.9999999999999999, 0.1}};

  TempDir dir;
  pf.save(dir.file("pf.json"));
  const PfFile loaded = PfFile::load(dir.file("pf.json"));
  CHECK(loaded.points == pf.points);  // bit-exact decimals
  CHECK(loaded.reference_point == pf.reference_point);
  CHECK(loaded.seed == 3);
  CHECK(loaded.format_version == 1);

  PfFile bad = pf;
  bad.points = {{1, 1}, {2, 2}};  // dominated pair
  CHECK_THROWS_AS(bad.save(dir.file("bad.json")), Error);

  spit(dir.file("garbage.json"), "not json at all");
  CHECK_THROWS_AS(PfFile::load(dir.file("garbage.json")), Error);
  spit(dir.file("missing.json"), "{\"format_version\": 1}");
  CHECK_THROWS_AS(PfFile::load(dir.file("missing.json")), Error);
}

TEST_CASE("eval prints the library values bit-exactly") {
  TempDir dir;
  PfFile pf;
  pf.env = "unit";
  pf.reference_point = {0.0, 0.0};
  pf.points = {{1.0, 1.0}};
  pf.save(dir.file("pf.json"));

  cli::EvalOptions options;
  options.pf_path = dir.file("pf.json");
  options.weight_count = 3;
  std::ostringstream out;
  CHECK(cli::run_eval(options, out) == 0);
  CHECK(out.str() ==
        "cardinality: 1\nhypervolume: 1\nexpected_utility: 1\n");

  PfFile two;
  two.reference_point = {0.0, 0.0};
  two.points = {{2.0, 1.0}, {1.0, 2.0}};
  two.save(dir.file("pf2.json"));
  options.pf_path = dir.file("pf2.json");
  std::ostringstream out2;
  cli::run_eval(options, out2);
  const double hv = hypervolume(two.points, two.reference_point);
  const double eu = expected_utility(two.points, generate_weights(3, 2));
  CHECK(out2.str() == "cardinality: 2\nhypervolume: " + format_double(hv) +
                          "\nexpected_utility: " + format_double(eu) + "\n");
  CHECK(hv == 3.0);
}

TEST_CASE("run produces byte-identical outputs for repeated seeded runs") {
  TempDir dir;
  spit(dir.file("exp.ini"),
       "[experiment]\n"
       "env = route_choice\n"
       "algorithm = iql\n"
       "seeds = 0,1\n"
       "out = " + dir.file("a") + "\n"
       "[env]\n"
       "agents = 60\n"
       "[iql]\n"
       "episodes = 40\n"
       "weights = 1.0,0.0\n");

  std::ostringstream log;
  cli::RunOptions options;
  options.config_path = dir.file("exp.ini");
  CHECK(cli::run_experiment(options, log) == 0);
  options.out_override = dir.file("b");
  CHECK(cli::run_experiment(options, log) == 0);

  for (const char* name : {"curve_seed0.csv", "curve_seed1.csv", "summary.csv", "meta.json"}) {
    CHECK(slurp((fs::path(dir.file("a")) / name).string()) ==
          slurp((fs::path(dir.file("b")) / name).string()));
  }
  const std::string curve = slurp((fs::path(dir.file("a")) / "curve_seed0.csv").string());
  CHECK(curve.rfind("episode,seed,mean_return_0,mean_return_1,scalarised", 0) == 0);
}

TEST_CASE("decomposition runs write valid pf files with indicators") {
  TempDir dir;
  spit(dir.file("exp.ini"),
       "[experiment]\n"
       "env = gem_mining\n"
       "algorithm = decomposition\n"
       "seeds = 0\n"
       "out = " + dir.file("out") + "\n"
       "[env]\n"
       "villages = 2\n"
       "instance_seed = 7\n"
       "[iql]\n"
       "epsilon = 0.5\n"
       "[decomposition]\n"
       "num_weights = 3\n"
       "episodes_per_weight = 2000\n"
       "eval = exact\n"
       "ref_point = 0,0\n");
  std::ostringstream log;
  cli::RunOptions options;
  options.config_path = dir.file("exp.ini");
  CHECK(cli::run_experiment(options, log) == 0);

  const PfFile pf = PfFile::load((fs::path(dir.file("out")) / "pf_seed0.json").string());
  pf.validate();
  CHECK_FALSE(pf.points.empty());

  // Evaluating the written file reproduces the in-process indicators bit for
  // bit: the serialisation is lossless and the maths identical.
  cli::EvalOptions eval;
  eval.pf_path = (fs::path(dir.file("out")) / "pf_seed0.json").string();
  eval.weight_count = 101;
  std::ostringstream printed;
  cli::run_eval(eval, printed);
  const std::string expected =
      "cardinality: " + std::to_string(cardinality(pf.points)) +
      "\nhypervolume: " + format_double(hypervolume(pf.points, pf.reference_point)) +
      "\nexpected_utility: " +
      format_double(expected_utility(pf.points, generate_weights(101, 2))) + "\n";
  CHECK(printed.str() == expected);
  const std::string summary = slurp((fs::path(dir.file("out")) / "summary.csv").string());
  CHECK(summary.find("hypervolume") != std::string::npos);
  CHECK(summary.find("cardinality") != std::string::npos);
  CHECK(summary.find("expected_utility") != std::string::npos);
}

TEST_CASE("decomposition on an individual-reward env is a config error") {
  TempDir dir;
  spit(dir.file("exp.ini"),
       "[experiment]\nenv = route_choice\nalgorithm = decomposition\nseeds = 0\n"
       "out = " + dir.file("out") + "\n[env]\nagents = 10\n");
  std::ostringstream log;
  cli::RunOptions options;
  options.config_path = dir.file("exp.ini");
  try {
    cli::run_experiment(options, log);
    FAIL("expected a config error");
  } catch (const Error& error) {
    CHECK(error.code() == Errc::ConfigInvalid);
  }
}

TEST_CASE("oracle command writes the brute-force front") {
  TempDir dir;
  spit(dir.file("exp.ini"),
       "[experiment]\n"
       "env = item_gathering\n"
       "out = " + dir.file("out") + "\n"
       "[env]\n"
       "width = 3\nheight = 3\nagents = 2\ncolours = 2\nhorizon = 3\n"
       "reward_mode = team\n"
       "layout = 1.2|BA.|2.1\n"
       "[oracle]\n"
       "horizon = 3\n");
  std::ostringstream log;
  cli::OracleOptions options;
  options.config_path = dir.file("exp.ini");
  options.out_path = dir.file("oracle.json");
  CHECK(cli::run_oracle(options, log) == 0);

  const PfFile pf = PfFile::load(dir.file("oracle.json"));
  GatherConfig config = testing::tiny_gather_fixture();
  ItemGatheringEnv env(config);
  auto expected = brute_force_pf(env, 3);
  auto points = pf.points;
  std::sort(points.begin(), points.end());
  std::sort(expected.begin(), expected.end());
  CHECK(points == expected);
}

TEST_CASE("list shows the eight environments") {
  std::ostringstream out;
  CHECK(cli::run_list(out) == 0);
  for (const std::string& id : known_env_ids())
    CHECK(out.str().find(id) != std::string::npos);
}

TEST_SUITE_END();
