#include "srcsel/selectors/grasp.hpp"

#include <algorithm>

#include "srcsel/core/error.hpp"

namespace srcsel {

namespace {

struct Ranked {
  SourceId id;
  double marginal;
};

}  // namespace

PartialSolution grasp_construction(Oracle& oracle, const SourceSet& pool,
                                   const SourceSet& selected, double best_profit,
                                   std::size_t rcl_size, Rng& rng) {
  if (rcl_size == 0) throw Error(ErrorCode::InvalidArgument, "RCL size must be at least 1");
  PartialSolution best{selected, best_profit};
  SourceSet current = selected;
  const std::size_t steps = (pool - selected).size();
  for (std::size_t step = 0; step < steps; ++step) {
    // G(empty) is undefined; it is the same constant for every candidate,
    // so zero leaves the ranking unchanged.
    const double base_gain = current.is_empty() ? 0.0 : oracle.gain(current);
    std::vector<Ranked> rcl;
    (pool - current).for_each([&](SourceId s) {
      const double marginal = oracle.gain(current.with(s)) - base_gain - oracle.individual_cost(s);
      rcl.push_back(Ranked{s, marginal});
    });
    if (rcl.empty()) break;
    std::stable_sort(rcl.begin(), rcl.end(),
                     [](const Ranked& a, const Ranked& b) { return a.marginal > b.marginal; });
    if (rcl.size() > rcl_size) rcl.resize(rcl_size);

    current = current.with(rcl[rng.index(rcl.size())].id);
    const double p = oracle.profit(current);
    if (p > best.profit) best = PartialSolution{current, p};
  }
  return best;
}

PartialSolution grasp_local_search(Oracle& oracle, const SourceSet& selected, double profit,
                                   std::size_t rcl_size, Rng& rng) {
  PartialSolution current{selected, profit};
  const SourceSet catalog = oracle.all();
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto s : current.subset.members()) {
      const SourceSet reduced = current.subset.without(s);
      const double reduced_profit = reduced.is_empty() ? kNoProfit : oracle.profit(reduced);
      const auto candidate =
          grasp_construction(oracle, catalog.without(s), reduced, reduced_profit, rcl_size, rng);
      if (candidate.profit > current.profit) {
        current = candidate;
        improved = true;
        break;
      }
    }
  }
  return current;
}

SelectionResult select_grasp(Oracle& oracle, const GraspParams& params) {
  if (params.iterations == 0) throw Error(ErrorCode::InvalidArgument, "GRASP needs N >= 1");
  RunTracker tracker(oracle, "grasp");
  Rng rng(params.seed);
  const SourceSet catalog = oracle.all();
  for (std::size_t i = 0; i < params.iterations; ++i) {
    auto built = grasp_construction(oracle, catalog, oracle.empty_set(), kNoProfit,
                                    params.rcl_size, rng);
    if (built.subset.is_empty()) continue;
    const auto refined =
        grasp_local_search(oracle, built.subset, built.profit, params.rcl_size, rng);
    tracker.offer("iteration " + std::to_string(i + 1), refined.subset, refined.profit);
  }
  if (!tracker.has_incumbent()) {
    throw Error(ErrorCode::AllConstructionsEmpty, "every GRASP construction returned no subset");
  }
  return tracker.finish();
}

}  // namespace srcsel
