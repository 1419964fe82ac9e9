#include "srcsel/bench/runner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "srcsel/bench/metrics.hpp"
#include "srcsel/core/error.hpp"

namespace srcsel {

ReportRecord make_record(const SelectionResult& result, std::optional<std::uint64_t> seed,
                         std::size_t m, const GroundTruthTable* table, double wall_time_ms) {
  ReportRecord r;
  r.algorithm = result.algorithm;
  r.seed = seed;
  r.subset = result.subset;
  r.breakdown = result.breakdown;
  r.models_explored = result.models_explored;
  r.models_explored_pct = models_explored_pct(result.models_explored, m);
  r.wall_time_ms = wall_time_ms;
  if (table) {
    r.percentile = subset_percentile(result.subset, *table);
    const double p_star = table->max_profit();
    if (result.breakdown.profit > p_star) {
      throw Error(ErrorCode::InvalidArgument,
                  result.algorithm + " reported a profit above the ground-truth optimum");
    }
    if (p_star > 0.0) r.delta_profit = ground_truth_diff(p_star, result.breakdown.profit);
  }
  return r;
}

BenchReport run_benchmark(const std::shared_ptr<const GainModel>& model, const CostModel& costs,
                          const std::vector<AlgorithmConfig>& algorithms,
                          const std::vector<std::uint64_t>& seeds, const BenchOptions& options) {
  if (algorithms.empty()) throw Error(ErrorCode::InvalidArgument, "no algorithms to benchmark");
  const std::size_t m = model->source_count();
  BenchReport report;
  std::shared_ptr<EvalCache> truth_cache;
  if (options.compute_metrics) {
    truth_cache = std::make_shared<EvalCache>();
    Oracle truth_oracle(model, costs, truth_cache);
    report.ground_truth = build_ground_truth(truth_oracle, options.ground_truth);
  }
  const std::vector<std::uint64_t> default_seed = {0};
  const auto& stochastic_seeds = seeds.empty() ? default_seed : seeds;

  for (const auto& config : algorithms) {
    const std::string name(to_string(config.algorithm));
    std::vector<std::optional<std::uint64_t>> runs;
    if (is_stochastic(config.algorithm)) {
      runs.assign(stochastic_seeds.begin(), stochastic_seeds.end());
    } else {
      runs.push_back(std::nullopt);
    }
    for (const auto& seed : runs) {
      Oracle oracle(model, costs);
      if (options.reuse_evaluations && truth_cache) oracle.set_warm_store(truth_cache);
      const auto start = std::chrono::steady_clock::now();
      SelectionResult result;
      try {
        auto select = [&](Oracle& o) { return run_algorithm(o, config, seed.value_or(0)); };
        result = options.budget ? run_within_budget(oracle, *options.budget, name, select)
                                : select(oracle);
      } catch (const Error& e) {
        throw Error(e.code(), name + ": " + e.what());
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      report.records.push_back(make_record(
          result, seed, m, report.ground_truth ? &*report.ground_truth : nullptr, ms));
    }
  }
  return report;
}

std::vector<AlgorithmSummary> BenchReport::summaries() const {
  std::vector<AlgorithmSummary> out;
  for (const auto& rec : records) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const AlgorithmSummary& s) { return s.algorithm == rec.algorithm; });
    if (it == out.end()) {
      AlgorithmSummary fresh;
      fresh.algorithm = rec.algorithm;
      out.push_back(std::move(fresh));
      it = out.end() - 1;
    }
    it->runs += 1;
  }
  for (auto& s : out) {
    double profit = 0, pct = 0, explored = 0, delta = 0;
    bool have_pct = true, have_delta = true;
    s.min_profit = std::numeric_limits<double>::infinity();
    s.max_profit = -std::numeric_limits<double>::infinity();
    for (const auto& rec : records) {
      if (rec.algorithm != s.algorithm) continue;
      profit += rec.breakdown.profit;
      s.min_profit = std::min(s.min_profit, rec.breakdown.profit);
      s.max_profit = std::max(s.max_profit, rec.breakdown.profit);
      explored += rec.models_explored_pct;
      if (rec.percentile) pct += *rec.percentile; else have_pct = false;
      if (rec.delta_profit) delta += *rec.delta_profit; else have_delta = false;
    }
    const auto n = static_cast<double>(s.runs);
    s.mean_profit = profit / n;
    s.mean_explored_pct = explored / n;
    if (have_pct) s.mean_percentile = pct / n;
    if (have_delta) s.mean_delta_profit = delta / n;
  }
  return out;
}

}  // namespace srcsel
