#include <fstream>
#include <sstream>

#include "doctest.h"
#include "srcsel/core/error.hpp"
#include "srcsel/io/config.hpp"
#include "srcsel/io/csv.hpp"
#include "srcsel/io/loader.hpp"
#include "srcsel/io/report.hpp"
#include "support/oracles.hpp"

using namespace srcsel;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an srcsel::Error");
  return ErrorCode::InvalidArgument;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const std::filesystem::path kFixtures = SRCSEL_FIXTURE_DIR;

}  // namespace

TEST_CASE("csv parsing") {
  const auto t = parse_csv("\xEF\xBB\xBF" "a,b,c\n1,\"x, y\",3\r\n\n4,\"say \"\"hi\"\"\",6\n");
  CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][1] == "x, y");
  CHECK(t.rows[1][1] == "say \"hi\"");
  CHECK(t.column("c") == 2u);
  CHECK_FALSE(t.column("d").has_value());

  CHECK(code_of([] { parse_csv("a,b\n1\n"); }) == ErrorCode::SchemaMismatch);
  CHECK(code_of([] { parse_csv(""); }) == ErrorCode::SchemaMismatch);
  CHECK(code_of([] { read_csv("/nonexistent/file.csv"); }) == ErrorCode::IoError);

  const std::vector<std::string> cells = {"plain", "with,comma", "with \"quote\"", ""};
  const auto round = parse_csv("h1,h2,h3,h4\n" + csv_line(cells) + "\n");
  CHECK(round.rows.at(0) == cells);
}

TEST_CASE("config parsing and defaults") {
  const auto cfg = parse_config(
      "# comment\n"
      "mode = single_csv\n"
      "input = data/all.csv\n"
      "partition_column = state\n"
      "feature_columns = age, income\n"
      "algorithm = grasp   # trailing comment\n"
      "grasp.iterations = 7\n"
      "seeds = 3,4\n"
      "cost.zero = true\n",
      "/base");
  CHECK(cfg.mode == InputMode::SingleCsv);
  CHECK(cfg.input == std::filesystem::path("/base/data/all.csv"));
  CHECK(cfg.partition_column == std::optional<std::string>("state"));
  CHECK(cfg.feature_columns == std::vector<std::string>{"age", "income"});
  CHECK(cfg.algorithm.algorithm == Algorithm::Grasp);
  CHECK(cfg.algorithm.grasp.iterations == 7);
  CHECK(cfg.algorithm.grasp.rcl_size == 5);
  CHECK(cfg.algorithm.splice.k_max == 7);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{3, 4});
  CHECK(cfg.costs.zero_cost);

  const auto defaults = parse_config("input = x\n");
  CHECK(defaults.seeds.size() == 10);
  CHECK(defaults.algorithm.algorithm == Algorithm::Splice);
  CHECK(defaults.costs.b == -70);
  CHECK(defaults.ground_truth_cap == 20);

  // The trainer follows the task regardless of key order.
  const auto reg = parse_config("trainer.ridge = 0.5\ntask = regression\ninput = x\n");
  CHECK(reg.task.kind == TaskKind::Regression);
  CHECK(reg.task.trainer.ridge == 0.5);

  CHECK(parse_seed_list("1, 2,3") == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(code_of([] { parse_seed_list("1,x"); }) == ErrorCode::ConfigError);
  CHECK(config_keys_help().find("splice.k_max") != std::string::npos);
}

TEST_CASE("config errors") {
  const char* bad[] = {
      "input = x\nbogus = 1\n",
      "input = x\ninput = y\n",
      "input = x\nthis line has no equals\n",
      "input = x\ngrasp.iterations = many\n",
      "input = x\nalgorithm = tabu\n",
      "mode = sources_dir\ninput = x\npartition_column = state\n",
      "mode = single_csv\ninput = x\n",
      "input = x\nfeature_columns = label,age\n",
      "input = x\ncost.t = 3\n",
      "mode = ftp\ninput = x\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(code_of([&] { parse_config(text).validate(); }) == ErrorCode::ConfigError);
  }
  CHECK(code_of([] { load_config("/nonexistent/run.cfg"); }) == ErrorCode::IoError);
}

TEST_CASE("sources directory loads in filename order") {
  testing::TempDir dir("srcdir");
  write_file(dir.path() / "zeta.csv", "x,label\n1,0\n2,1\n");
  write_file(dir.path() / "alpha.csv", "x,label\n3,1\nNA,0\n4,0\n");
  write_file(dir.path() / "mid.csv", "x,label\n5,1\n,1\n");
  write_file(dir.path() / "notes.txt", "ignored");
  RunConfig cfg;
  cfg.input = dir.path();
  const auto loaded = load_sources(cfg);
  REQUIRE(loaded.catalog.size() == 3);
  CHECK(loaded.catalog.at(SourceId{0}).name == "alpha");
  CHECK(loaded.catalog.at(SourceId{1}).name == "mid");
  CHECK(loaded.catalog.at(SourceId{2}).name == "zeta");
  CHECK(loaded.summary.rows_read == 7);
  CHECK(loaded.summary.rows_dropped == 2);
  CHECK(loaded.sources[0].data.rows() == 2);
  CHECK(loaded.sources[0].data.features(1, 0) == 4.0);
  CHECK(loaded.catalog.at(SourceId{0}).record_count == 2);

  const auto again = load_sources(cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(fingerprint(again.sources[i].data) == fingerprint(loaded.sources[i].data));
  }
}

TEST_CASE("single csv partitions sort by value and one-hot columns are stable") {
  testing::TempDir dir("single");
  const auto path = dir.path() / "all.csv";
  write_file(path,
             "state,color,x,label\n"
             "TX,red,1,1\n"
             "CA,blue,2,0\n"
             "TX,green,3,0\n"
             "CA,red,4,1\n");
  RunConfig cfg;
  cfg.mode = InputMode::SingleCsv;
  cfg.input = path;
  cfg.partition_column = "state";
  cfg.categorical_columns = {"color"};
  const auto loaded = load_sources(cfg);
  REQUIRE(loaded.catalog.size() == 2);
  CHECK(loaded.catalog.at(SourceId{0}).name == "CA");
  CHECK(loaded.catalog.at(SourceId{1}).name == "TX");
  CHECK(loaded.summary.feature_names ==
        std::vector<std::string>{"color=blue", "color=green", "color=red", "x"});
  const auto& tx = loaded.sources[1].data.features;
  REQUIRE(tx.rows() == 2);
  CHECK(tx(0, 2) == 1.0);
  CHECK(tx(1, 1) == 1.0);
  CHECK(tx(1, 3) == 3.0);
}

TEST_CASE("loader errors") {
  testing::TempDir dir("errors");
  write_file(dir.path() / "a.csv", "x,label\nhello,1\n");
  RunConfig cfg;
  cfg.input = dir.path();
  CHECK(code_of([&] { load_sources(cfg); }) == ErrorCode::NonNumericFeature);

  write_file(dir.path() / "a.csv", "x,label\n1,1\n");
  cfg.feature_columns = {"y"};
  CHECK(code_of([&] { load_sources(cfg); }) == ErrorCode::MissingColumn);

  cfg.feature_columns.clear();
  write_file(dir.path() / "b.csv", "x,label\nNA,1\n");
  CHECK(code_of([&] { load_sources(cfg); }) == ErrorCode::EmptyPartition);

  testing::TempDir empty("empty");
  cfg.input = empty.path();
  CHECK(code_of([&] { load_sources(cfg); }) == ErrorCode::EmptyInput);
}

TEST_CASE("profit table problems replay the table") {
  const auto cfg = load_config(kFixtures / "three_source.cfg");
  const auto problem = load_problem(cfg);
  CHECK(problem.catalog.size() == 3);
  CHECK(problem.catalog.at(SourceId{2}).name == "c");
  CHECK(problem.model->gain(SourceSet::from_mask(3, 0b011)) == 15);
  CHECK(problem.costs.zero_cost);

  auto wrong = cfg;
  wrong.source_names = {"a", "b"};
  CHECK(code_of([&] { load_problem(wrong); }) == ErrorCode::ConfigError);
}

namespace {

ReportRecord sample_record(bool with_metrics) {
  ReportRecord r;
  r.algorithm = "grasp";
  r.seed = 7;
  r.subset = SourceSet::from_ids(4, {SourceId{0}, SourceId{2}});
  r.breakdown = ProfitBreakdown{0.1 + 0.2, 1.0 / 3.0, 0.1 + 0.2 - 1.0 / 3.0};
  if (with_metrics) {
    r.percentile = 200.0 / 3.0;
    r.delta_profit = 1e-17;
  }
  r.models_explored = 12;
  r.models_explored_pct = 80.0;
  r.wall_time_ms = 3.25;
  return r;
}

}  // namespace

TEST_CASE("report round-trip") {
  ReportFile file{4, {sample_record(true), sample_record(false)}};
  file.records[1].algorithm = "splice";
  file.records[1].seed.reset();
  std::stringstream buf;
  write_report(buf, file);
  const std::string text = buf.str();
  CHECK(text.find(",5,") != std::string::npos);
  const auto back = read_report(buf);
  CHECK(back.m == 4);
  REQUIRE(back.records.size() == 2);
  CHECK(back.records[0] == file.records[0]);
  CHECK(back.records[1] == file.records[1]);
  CHECK(record_key(back.records[0], 4) == record_key(file.records[0], 4));
  CHECK(SourceSet::from_ids(4, {SourceId{0}, SourceId{2}}).to_hex() == "5");

  testing::TempDir dir("report");
  save_report(dir.path() / "r.csv", file);
  CHECK(load_report(dir.path() / "r.csv").records == file.records);
}

TEST_CASE("report schema checks") {
  std::stringstream buf;
  write_report(buf, ReportFile{4, {sample_record(true)}});
  std::string text = buf.str();
  const auto eol = text.find('\n');

  std::string extra = text;
  extra.insert(eol, ",comment");
  const auto row_end = extra.find('\n', eol + 1);
  extra.insert(row_end, ",hello");
  std::istringstream extra_in(extra);
  CHECK(code_of([&] { read_report(extra_in); }) == ErrorCode::SchemaMismatch);

  std::string version = text;
  version.replace(eol + 1, 1, "2");
  std::istringstream version_in(version);
  CHECK(code_of([&] { read_report(version_in); }) == ErrorCode::SchemaMismatch);

  std::istringstream empty_in("");
  CHECK(code_of([&] { read_report(empty_in); }) == ErrorCode::SchemaMismatch);
}
