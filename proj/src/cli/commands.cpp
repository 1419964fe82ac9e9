#include "srcsel/cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "srcsel/bench/ground_truth.hpp"
#include "srcsel/bench/metrics.hpp"
#include "srcsel/bench/runner.hpp"
#include "srcsel/bench/synthetic.hpp"
#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"
#include "srcsel/io/config.hpp"
#include "srcsel/io/csv.hpp"
#include "srcsel/io/loader.hpp"
#include "srcsel/io/report.hpp"

namespace srcsel {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kTimingBanner = "-- timing (varies between runs) --";

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string opt_fixed(const std::optional<double>& v, int digits = 6) {
  return v ? fixed(*v, digits) : "-";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

RunConfig resolve_config(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
  }
  if (path.empty()) {
    throw UsageError(std::string("no config given; pass --config or set ") + kConfigEnvVar);
  }
  if (!fs::is_regular_file(path)) throw UsageError("--config: file not found: " + path);
  try {
    return load_config(path);
  } catch (const Error& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
}

Algorithm parse_algorithm_flag(const std::string& flag, const std::string& value) {
  try {
    return parse_algorithm(value);
  } catch (const Error&) {
    throw UsageError(flag + ": unknown algorithm '" + value +
                     "' (naive, greedy, random, grasp, splice, datamodel)");
  }
}

// Flags shared by select and benchmark that refine the configured
// algorithm parameters.
struct AlgorithmFlags {
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> rcl_size;
  std::optional<std::size_t> s_max;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> samples;

  void attach(CLI::App& cmd) {
    cmd.add_option("--iterations,-N", iterations, "GRASP passes N [default: 20]");
    cmd.add_option("--rcl-size,-k", rcl_size, "GRASP restricted candidate list size [default: 5]");
    cmd.add_option("--s-max", s_max, "splice: largest seed subset size [default: m]");
    cmd.add_option("--k-max", k_max, "splice: largest swap size [default: 7]");
    cmd.add_option("--samples", samples, "datamodel: training subsets T [default: min(2^m-1,1000)]");
  }

  void apply(AlgorithmConfig& a, std::size_t threads) const {
    if (iterations) a.grasp.iterations = *iterations;
    if (rcl_size) a.grasp.rcl_size = *rcl_size;
    if (s_max) a.splice.s_max = *s_max;
    if (k_max) a.splice.k_max = *k_max;
    if (samples) a.datamodel_samples = *samples;
    a.naive.threads = threads;
  }
};

void print_load_summary(std::ostream& out, const RunConfig& cfg, const Problem& p) {
  out << "sources          " << p.catalog.size() << " (" << to_string(cfg.mode) << ")\n";
  if (cfg.mode != InputMode::ProfitTable) {
    out << "rows             " << p.summary.rows_read << " read, " << p.summary.rows_dropped
        << " dropped for missing cells\n";
    out << "features         " << p.summary.feature_names.size() << '\n';
  }
}

std::size_t effective_threads(std::size_t flag, const RunConfig& cfg) {
  return flag > 0 ? flag : cfg.threads;
}

int cmd_select(const std::string& config_path, std::size_t threads_flag,
               const std::optional<std::string>& algorithm, const std::optional<std::uint64_t>& seed,
               const std::string& out_path, const AlgorithmFlags& flags, std::ostream& out) {
  RunConfig cfg = resolve_config(config_path);
  AlgorithmConfig alg = cfg.algorithm;
  if (algorithm) alg.algorithm = parse_algorithm_flag("--algorithm", *algorithm);
  const std::size_t threads = effective_threads(threads_flag, cfg);
  flags.apply(alg, threads);
  const std::uint64_t run_seed = seed ? *seed : cfg.seeds.front();

  const Problem problem = load_problem(cfg);
  Oracle oracle(problem.model, problem.costs);
  const auto start = std::chrono::steady_clock::now();
  const SelectionResult result = run_algorithm(oracle, alg, run_seed);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::size_t m = problem.catalog.size();
  const ReportRecord record = make_record(
      result, is_stochastic(alg.algorithm) ? std::optional(run_seed) : std::nullopt, m, nullptr,
      ms);

  print_load_summary(out, cfg, problem);
  out << "algorithm        " << result.algorithm << '\n';
  if (record.seed) out << "seed             " << *record.seed << '\n';
  out << "subset           " << problem.catalog.describe(result.subset) << '\n';
  out << "subset_mask_hex  " << result.subset.to_hex() << '\n';
  out << "gain             " << format_real(result.breakdown.gain) << '\n';
  out << "cost             " << format_real(result.breakdown.cost) << '\n';
  out << "profit           " << format_real(result.breakdown.profit) << '\n';
  out << "models_explored  " << result.models_explored << " ("
      << fixed(record.models_explored_pct, 3) << "% of " << nonempty_subset_count(m) << ")\n";
  for (const auto& step : result.trace) {
    out << "  improved at " << step.label << ": " << problem.catalog.describe(step.subset) << " "
        << format_real(step.profit) << '\n';
  }
  out << kTimingBanner << '\n';
  out << "wall_time_ms     " << fixed(ms, 3) << '\n';

  if (!out_path.empty()) save_report(out_path, ReportFile{m, {record}});
  return kExitOk;
}

int cmd_benchmark(const std::string& config_path, std::size_t threads_flag,
                  const std::optional<std::string>& algorithms,
                  const std::optional<std::string>& seeds, const std::string& out_path,
                  bool no_percentile, bool force, bool reuse, std::optional<std::size_t> budget,
                  const AlgorithmFlags& flags, std::ostream& out, std::ostream& err) {
  RunConfig cfg = resolve_config(config_path);
  const std::size_t threads = effective_threads(threads_flag, cfg);
  std::vector<AlgorithmConfig> configs;
  if (algorithms) {
    for (const auto& name : split(*algorithms, ',')) {
      AlgorithmConfig a = cfg.algorithm;
      a.algorithm = parse_algorithm_flag("--algorithms", std::string(trim(name)));
      configs.push_back(a);
    }
  } else {
    for (Algorithm algo : all_algorithms()) {
      AlgorithmConfig a = cfg.algorithm;
      a.algorithm = algo;
      configs.push_back(a);
    }
  }
  for (auto& a : configs) flags.apply(a, threads);
  std::vector<std::uint64_t> seed_list = cfg.seeds;
  if (seeds) {
    try {
      seed_list = parse_seed_list(*seeds);
    } catch (const Error& e) {
      throw UsageError(std::string("--seeds: ") + e.what());
    }
  }

  const Problem problem = load_problem(cfg);
  const std::size_t m = problem.catalog.size();
  BenchOptions options;
  options.compute_metrics = !no_percentile;
  options.ground_truth = {cfg.ground_truth_cap, cfg.force_ground_truth || force, threads};
  options.reuse_evaluations = reuse;
  options.budget = budget;
  if (options.compute_metrics && m > options.ground_truth.cap && !options.ground_truth.force) {
    err << "error: BudgetExceeded: ground truth for " << m << " sources exceeds the cap of "
        << options.ground_truth.cap << "; pass --no-percentile to skip the percentile metrics\n";
    return kExitRuntime;
  }
  const BenchReport report = run_benchmark(problem.model, problem.costs, configs, seed_list,
                                           options);

  print_load_summary(out, cfg, problem);
  if (report.ground_truth) {
    const auto& gt = *report.ground_truth;
    out << "optimum          " << problem.catalog.describe(gt.argmax()) << " profit "
        << format_real(gt.max_profit()) << '\n';
  }
  out << pad("algorithm", 11) << pad("runs", 6) << pad("mean_profit", 14)
      << pad("mean_percentile", 17) << pad("mean_explored_pct", 19) << "mean_delta_profit\n";
  for (const auto& s : report.summaries()) {
    out << pad(s.algorithm, 11) << pad(std::to_string(s.runs), 6)
        << pad(fixed(s.mean_profit), 14) << pad(opt_fixed(s.mean_percentile, 3), 17)
        << pad(fixed(s.mean_explored_pct, 3), 19) << opt_fixed(s.mean_delta_profit) << '\n';
  }
  out << kTimingBanner << '\n';
  for (const auto& r : report.records) {
    out << pad(r.algorithm, 11) << pad(r.seed ? std::to_string(*r.seed) : "-", 6)
        << fixed(r.wall_time_ms, 3) << " ms\n";
  }
  if (!out_path.empty()) save_report(out_path, ReportFile{m, report.records});
  return kExitOk;
}

int cmd_synth(const SynthConfig& synth, const std::string& out_dir, bool force, std::ostream& out) {
  try {
    synth.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const fs::path dir(out_dir);
  if (fs::exists(dir) && !force) {
    throw Error(ErrorCode::IoError, out_dir + " already exists; pass --force to overwrite");
  }
  const SyntheticData data = generate_synthetic(synth);
  fs::create_directories(dir);

  std::vector<std::string> header;
  for (std::size_t j = 0; j < synth.p; ++j) header.push_back("f" + std::to_string(j));
  header.push_back("label");
  std::vector<std::string> clean_names;
  for (std::size_t s = 0; s < data.sources.size(); ++s) {
    const auto& src = data.sources[s];
    if (data.clean.contains(SourceId{s})) clean_names.push_back(src.name);
    const fs::path file = dir / (src.name + ".csv");
    std::ofstream f(file, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + file.string());
    f << csv_line(header) << '\n';
    std::vector<std::string> row(synth.p + 1);
    for (Eigen::Index i = 0; i < src.data.features.rows(); ++i) {
      for (std::size_t j = 0; j < synth.p; ++j) {
        row[j] = format_real(src.data.features(i, static_cast<Eigen::Index>(j)));
      }
      row[synth.p] = format_real(src.data.labels(i));
      f << csv_line(row) << '\n';
    }
    if (!f) throw Error(ErrorCode::IoError, "failed writing " + file.string());
  }
  std::ofstream manifest(dir / "manifest.txt", std::ios::binary);
  manifest << "seed=" << synth.seed << '\n'
           << "m=" << synth.m << '\n'
           << "n=" << synth.n << '\n'
           << "p=" << synth.p << '\n'
           << "noise_clean=" << format_real(synth.label_noise_clean) << '\n'
           << "noise_corrupt=" << format_real(synth.label_noise_corrupt) << '\n'
           << "clean=" << csv_line(clean_names) << '\n';
  if (!manifest) throw Error(ErrorCode::IoError, "failed writing the manifest");

  out << "wrote " << synth.m << " sources to " << dir.string() << '\n';
  out << "clean sources    " << csv_line(clean_names) << '\n';
  return kExitOk;
}

int cmd_ground_truth(const std::string& config_path, std::size_t threads_flag,
                     const std::string& out_path, bool force, std::ostream& out) {
  RunConfig cfg = resolve_config(config_path);
  const Problem problem = load_problem(cfg);
  Oracle oracle(problem.model, problem.costs);
  GroundTruthOptions options{cfg.ground_truth_cap, cfg.force_ground_truth || force,
                             effective_threads(threads_flag, cfg)};
  const auto start = std::chrono::steady_clock::now();
  const GroundTruthTable table = build_ground_truth(oracle, options);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  table.save(out_path);
  print_load_summary(out, cfg, problem);
  out << "subsets          " << table.size() << '\n';
  out << "optimum          " << problem.catalog.describe(table.argmax()) << '\n';
  out << "optimum_mask_hex " << table.argmax().to_hex() << '\n';
  out << "max_profit       " << format_real(table.max_profit()) << '\n';
  out << kTimingBanner << '\n';
  out << "wall_time_ms     " << fixed(ms, 3) << '\n';
  return kExitOk;
}

int cmd_show(const std::string& path, std::size_t top, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("show: file not found: " + path);
  std::string first;
  std::getline(in, first);
  in.close();

  if (first.starts_with("m=")) {
    const GroundTruthTable table = GroundTruthTable::load(path);
    auto entries = table.entries();
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return canonical_less(a.first, b.first);
    });
    out << "ground-truth table, m=" << table.source_count() << ", " << table.size()
        << " subsets\n";
    out << "optimum " << table.argmax().to_hex() << " profit " << format_real(table.max_profit())
        << '\n';
    out << pad("rank", 6) << pad("mask_hex", 18) << pad("size", 6) << pad("profit", 26)
        << "percentile\n";
    const std::size_t shown = top == 0 ? entries.size() : std::min(top, entries.size());
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& [s, p] = entries[i];
      out << pad(std::to_string(i + 1), 6) << pad(s.to_hex(), 18)
          << pad(std::to_string(s.size()), 6) << pad(format_real(p), 26)
          << fixed(subset_percentile(s, table), 3) << '\n';
    }
    if (shown < entries.size()) out << "(" << entries.size() - shown << " more)\n";
    return kExitOk;
  }

  const ReportFile report = load_report(path);
  out << "report, m=" << report.m << ", " << report.records.size() << " records\n";
  out << pad("algorithm", 11) << pad("seed", 6) << pad("subset", 18) << pad("profit", 14)
      << pad("percentile", 12) << pad("explored", 10) << pad("explored_pct", 14)
      << pad("delta_profit", 14) << "wall_time_ms\n";
  for (const auto& r : report.records) {
    out << pad(r.algorithm, 11) << pad(r.seed ? std::to_string(*r.seed) : "-", 6)
        << pad(r.subset.to_hex(), 18) << pad(fixed(r.breakdown.profit), 14)
        << pad(opt_fixed(r.percentile, 3), 12) << pad(std::to_string(r.models_explored), 10)
        << pad(fixed(r.models_explored_pct, 3), 14) << pad(opt_fixed(r.delta_profit), 14)
        << fixed(r.wall_time_ms, 3) << '\n';
  }
  return kExitOk;
}

}  // namespace

constexpr const char* kSearchDefaults =
    "Search defaults: N=20, k=5, s_max=m, k_max=7, T=min(2^m-1,1000).";

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Select a profitable subset of data sources for training a model."};
  app.name("srcsel");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(std::string(kSearchDefaults) + "\n\n" +
             "Config keys (flat `key = value` file; default path from " +
             kConfigEnvVar + "):\n" + config_keys_help());
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker thread cap [default: config `threads`, 1]");

  AlgorithmFlags select_flags;
  std::string select_config, select_out;
  std::optional<std::string> select_algorithm;
  std::optional<std::uint64_t> select_seed;
  auto* select = app.add_subcommand("select", "Run one selection algorithm");
  select->add_option("--config,config", select_config, "run configuration file");
  select->add_option("--algorithm", select_algorithm,
                     "naive | greedy | random | grasp | splice | datamodel "
                     "[default: config `algorithm`, splice]");
  select->add_option("--seed", select_seed, "seed of a stochastic algorithm [default: first config seed, 0]");
  select->add_option("--out", select_out, "write a one-record report here");
  select_flags.attach(*select);
  select->footer(kSearchDefaults);

  AlgorithmFlags bench_flags;
  std::string bench_config, bench_out;
  std::optional<std::string> bench_algorithms, bench_seeds;
  bool no_percentile = false, bench_force = false, reuse = false;
  std::optional<std::size_t> budget;
  auto* bench = app.add_subcommand("benchmark", "Compare algorithms against the ground truth");
  bench->add_option("--config,config", bench_config, "run configuration file");
  bench->add_option("--algorithms", bench_algorithms,
                    "comma-separated algorithms [default: all six]");
  bench->add_option("--seeds", bench_seeds,
                    "comma-separated seeds of stochastic algorithms [default: config, 0..9]");
  bench->add_option("--out", bench_out, "write the report here");
  bench->add_flag("--no-percentile", no_percentile, "skip ground truth and its metrics");
  bench->add_flag("--force", bench_force, "enumerate ground truth beyond the cap");
  bench->add_flag("--reuse-evaluations", reuse,
                  "serve runs from the ground-truth evaluations (counts unchanged)");
  bench->add_option("--budget", budget, "cap on models explored per run [default: none]");
  bench_flags.attach(*bench);
  bench->footer(kSearchDefaults);

  SynthConfig synth_cfg;
  std::string synth_dir;
  bool synth_force = false;
  auto* synth = app.add_subcommand("synth", "Generate sources with a planted clean subset");
  synth->add_option("--m", synth_cfg.m, "sources")->capture_default_str();
  synth->add_option("--n", synth_cfg.n, "rows per source")->capture_default_str();
  synth->add_option("--p", synth_cfg.p, "features")->capture_default_str();
  synth->add_option("--clean", synth_cfg.clean_sources, "clean sources")->capture_default_str();
  synth->add_option("--noise-clean", synth_cfg.label_noise_clean, "label flip rate of clean sources")
      ->capture_default_str();
  synth->add_option("--noise-corrupt", synth_cfg.label_noise_corrupt,
                    "label flip rate of the other sources")
      ->capture_default_str();
  synth->add_option("--seed", synth_cfg.seed, "generator seed")->capture_default_str();
  synth->add_option("--out-dir", synth_dir, "output directory")->required();
  synth->add_flag("--force", synth_force, "overwrite an existing directory");

  std::string gt_config, gt_out;
  bool gt_force = false;
  auto* gt = app.add_subcommand("ground-truth", "Enumerate the profit of every nonempty subset");
  gt->add_option("--config,config", gt_config, "run configuration file");
  gt->add_option("--out", gt_out, "table file to write")->required();
  gt->add_flag("--force", gt_force, "enumerate beyond the cap [default cap: 20 sources]");

  std::string show_path;
  std::size_t show_top = 20;
  auto* show = app.add_subcommand("show", "Pretty-print a report or ground-truth file");
  show->add_option("file", show_path, "report or ground-truth file")->required();
  show->add_option("--top", show_top, "ground-truth rows to list, best first (0 = all)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*select) {
      return cmd_select(select_config, threads, select_algorithm, select_seed, select_out,
                        select_flags, out);
    }
    if (*bench) {
      return cmd_benchmark(bench_config, threads, bench_algorithms, bench_seeds, bench_out,
                           no_percentile, bench_force, reuse, budget, bench_flags, out, err);
    }
    if (*synth) return cmd_synth(synth_cfg, synth_dir, synth_force, out);
    if (*gt) return cmd_ground_truth(gt_config, threads, gt_out, gt_force, out);
    if (*show) return cmd_show(show_path, show_top, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace srcsel
