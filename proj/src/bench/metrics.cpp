#include "srcsel/bench/metrics.hpp"

#include <cmath>

#include "srcsel/core/error.hpp"

namespace srcsel {

double subset_percentile(const SourceSet& s, const GroundTruthTable& table) {
  const double target = table.profit(s);
  std::size_t below = 0;
  const auto& profits = table.by_mask();
  for (std::size_t mask = 1; mask < profits.size(); ++mask) {
    if (profits[mask] < target) ++below;
  }
  return 100.0 * static_cast<double>(below) / static_cast<double>(table.size());
}

double models_explored_pct(std::size_t explored, std::size_t m) {
  const double total = std::ldexp(1.0, static_cast<int>(m)) - 1.0;
  return 100.0 * static_cast<double>(explored) / total;
}

double ground_truth_diff(double p_star, double p_method) {
  if (!(p_star > 0.0)) {
    throw Error(ErrorCode::NonpositiveOptimum, "optimal profit is not positive");
  }
  return (p_star - p_method) / p_star;
}

}  // namespace srcsel
