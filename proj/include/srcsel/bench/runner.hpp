#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srcsel/bench/ground_truth.hpp"
#include "srcsel/selectors/registry.hpp"

namespace srcsel {

// One (algorithm, seed) row of a benchmark report.
struct ReportRecord {
  std::string algorithm;
  std::optional<std::uint64_t> seed;  // empty for deterministic algorithms
  SourceSet subset;
  ProfitBreakdown breakdown;
  std::optional<double> percentile;
  std::size_t models_explored = 0;
  double models_explored_pct = 0.0;
  std::optional<double> delta_profit;
  double wall_time_ms = 0.0;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t runs = 0;
  double mean_profit = 0.0;
  double min_profit = 0.0;
  double max_profit = 0.0;
  std::optional<double> mean_percentile;
  double mean_explored_pct = 0.0;
  std::optional<double> mean_delta_profit;
};

struct BenchReport {
  std::vector<ReportRecord> records;
  std::optional<GroundTruthTable> ground_truth;

  std::vector<AlgorithmSummary> summaries() const;
};

struct BenchOptions {
  // Build the ground-truth table and fill percentile / delta_profit.
  bool compute_metrics = true;
  GroundTruthOptions ground_truth;
  // Serve algorithm runs from the ground-truth evaluations instead of
  // retraining. Exploration counts are unaffected; wall times shrink.
  bool reuse_evaluations = false;
  // Optional cap on models explored per run.
  std::optional<std::size_t> budget;
};

// Runs every algorithm on a fresh cache: deterministic ones once,
// stochastic ones once per seed.
BenchReport run_benchmark(const std::shared_ptr<const GainModel>& model, const CostModel& costs,
                          const std::vector<AlgorithmConfig>& algorithms,
                          const std::vector<std::uint64_t>& seeds, const BenchOptions& options);

// Metrics for one result against an optional ground-truth table.
ReportRecord make_record(const SelectionResult& result, std::optional<std::uint64_t> seed,
                         std::size_t m, const GroundTruthTable* table, double wall_time_ms);

}  // namespace srcsel
