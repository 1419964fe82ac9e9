#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "srcsel/cli/commands.hpp"
#include "srcsel/io/report.hpp"
#include "support/oracles.hpp"

using namespace srcsel;

namespace {

const std::filesystem::path kFixtures = SRCSEL_FIXTURE_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string before_timing(const std::string& text) {
  return text.substr(0, text.find("-- timing"));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("help lists the search defaults") {
  const auto r = cli({"select", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N=20, k=5, s_max=m, k_max=7") != std::string::npos);
  CHECK(cli({"--help"}).out.find("grasp.rcl_size") != std::string::npos);
}

TEST_CASE("select on the three-source fixture") {
  const auto cfg = (kFixtures / "three_source.cfg").string();
  const auto r = cli({"select", cfg, "--algorithm", "splice", "--s-max", "8", "--k-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{a,b}") != std::string::npos);
  CHECK(r.out.find("profit           15\n") != std::string::npos);

  const auto first = cli({"select", "--config", cfg, "--algorithm", "naive"});
  const auto second = cli({"select", "--config", cfg, "--algorithm", "naive"});
  CHECK(first.code == 0);
  CHECK(before_timing(first.out) == before_timing(second.out));
  CHECK(first.out.find("-- timing") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(cli({"select", "/nonexistent/run.cfg"}).code == 1);
  CHECK(cli({"select", (kFixtures / "three_source.cfg").string(), "--algorithm", "tabu"}).code == 1);
  CHECK(cli({"select", "--no-such-flag"}).code == 1);
  CHECK(cli({}).code == 1);
  const auto r = cli({"select", (kFixtures / "three_source.cfg").string(), "--iterations", "x"});
  CHECK(r.code == 1);
  CHECK(r.err.find("iterations") != std::string::npos);
}

TEST_CASE("default config comes from the environment") {
  ::setenv(kConfigEnvVar, (kFixtures / "three_source.cfg").c_str(), 1);
  const auto r = cli({"select", "--algorithm", "greedy"});
  ::unsetenv(kConfigEnvVar);
  CHECK(r.code == 0);
  CHECK(r.out.find("{a,b}") != std::string::npos);
}

TEST_CASE("select writes a report record") {
  testing::TempDir dir("select");
  const auto out = dir.path() / "r.csv";
  const auto r = cli({"select", (kFixtures / "three_source.cfg").string(), "--algorithm", "grasp",
                      "--seed", "4", "--out", out.string()});
  REQUIRE(r.code == 0);
  const auto report = load_report(out);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].algorithm == "grasp");
  CHECK(report.records[0].seed == std::optional<std::uint64_t>(4));
  CHECK(report.records[0].subset.to_hex() == "3");
}

TEST_CASE("synth writes sources and a manifest deterministically") {
  testing::TempDir dir("synth");
  const auto a = dir.path() / "a";
  const auto b = dir.path() / "b";
  const std::vector<std::string> flags = {"--m", "8", "--n", "40", "--p", "10", "--clean", "3",
                                          "--seed", "5"};
  auto args = std::vector<std::string>{"synth", "--out-dir", a.string()};
  args.insert(args.end(), flags.begin(), flags.end());
  REQUIRE(cli(args).code == 0);
  args[2] = b.string();
  REQUIRE(cli(args).code == 0);

  std::size_t csvs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(a)) {
    if (entry.path().extension() != ".csv") continue;
    ++csvs;
    const auto text = slurp(entry.path());
    CHECK(text == slurp(b / entry.path().filename()));
    CHECK(count_lines(text) == 41);
    CHECK(text.rfind("f0,f1,f2,f3,f4,f5,f6,f7,f8,f9,label\n", 0) == 0);
  }
  CHECK(csvs == 8);
  const auto manifest = slurp(a / "manifest.txt");
  const auto clean = manifest.substr(manifest.find("clean=") + 6);
  CHECK(std::count(clean.begin(), clean.end(), ',') == 2);

  args[2] = a.string();
  CHECK(cli(args).code == 2);
  args.push_back("--force");
  CHECK(cli(args).code == 0);
}

TEST_CASE("benchmark over all algorithms") {
  testing::TempDir dir("bench");
  REQUIRE(cli({"synth", "--m", "8", "--n", "40", "--p", "4", "--out-dir",
               (dir.path() / "src").string()})
              .code == 0);
  const auto cfg = dir.path() / "run.cfg";
  std::ofstream(cfg) << "input = src\ncost.zero = true\n";

  const auto out = dir.path() / "all.csv";
  const auto r = cli({"benchmark", cfg.string(), "--seeds", "1,2,3", "--out", out.string()});
  REQUIRE(r.code == 0);
  const auto table = before_timing(r.out);
  for (const char* name : {"naive", "greedy", "random", "grasp", "splice", "datamodel"}) {
    CHECK(table.find(std::string("\n") + name + " ") != std::string::npos);
  }
  const auto report = load_report(out);
  std::size_t grasp = 0;
  for (const auto& rec : report.records) {
    grasp += rec.algorithm == "grasp";
    if (rec.algorithm == "naive") CHECK(*rec.delta_profit == 0.0);
  }
  CHECK(grasp == 3);
  // random, grasp and datamodel run once per seed.
  CHECK(report.records.size() == 1 + 1 + 3 + 3 + 1 + 3);

  const auto bare = dir.path() / "bare.csv";
  REQUIRE(cli({"benchmark", cfg.string(), "--algorithms", "greedy", "--no-percentile", "--out",
               bare.string()})
              .code == 0);
  const auto text = slurp(bare);
  CHECK(text.find(",greedy,,") != std::string::npos);
  const auto rec = load_report(bare).records.at(0);
  CHECK_FALSE(rec.percentile.has_value());
  CHECK_FALSE(rec.delta_profit.has_value());

  const auto again = dir.path() / "again.csv";
  REQUIRE(cli({"benchmark", cfg.string(), "--seeds", "1,2,3", "--out", again.string()}).code == 0);
  const auto rerun = load_report(again);
  REQUIRE(rerun.records.size() == report.records.size());
  for (std::size_t i = 0; i < rerun.records.size(); ++i) {
    CHECK(record_key(rerun.records[i], 8) == record_key(report.records[i], 8));
  }

  CHECK(cli({"show", out.string()}).code == 0);
  const auto gt = dir.path() / "gt.txt";
  REQUIRE(cli({"ground-truth", cfg.string(), "--out", gt.string()}).code == 0);
  const auto shown = cli({"show", gt.string(), "--top", "3"});
  CHECK(shown.code == 0);
  CHECK(shown.out.find("m=8") != std::string::npos);
}

TEST_CASE("benchmark beyond the enumeration cap needs --no-percentile") {
  testing::TempDir dir("cap");
  REQUIRE(cli({"synth", "--m", "4", "--n", "20", "--p", "2", "--out-dir",
               (dir.path() / "src").string()})
              .code == 0);
  const auto cfg = dir.path() / "run.cfg";
  std::ofstream(cfg) << "input = src\nground_truth.cap = 3\n";
  const auto r = cli({"benchmark", cfg.string(), "--algorithms", "greedy"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--no-percentile") != std::string::npos);
  CHECK(cli({"benchmark", cfg.string(), "--algorithms", "greedy", "--no-percentile"}).code == 0);
}
