#include "srcsel/selectors/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "srcsel/core/error.hpp"
#include "srcsel/core/parallel.hpp"
#include "srcsel/core/random.hpp"

namespace srcsel {

std::uint64_t nonempty_subset_count(std::size_t m) {
  if (m > 63) throw Error(ErrorCode::InvalidArgument, "enumeration supports at most 63 sources");
  return (std::uint64_t{1} << m) - 1;
}

namespace {

struct Candidate {
  std::uint64_t mask = 0;
  double profit = kNoProfit;
};

bool beats(const Candidate& a, const Candidate& b, std::size_t m) {
  if (b.mask == 0) return true;
  if (a.profit != b.profit) return a.profit > b.profit;
  return canonical_less(SourceSet::from_mask(m, a.mask), SourceSet::from_mask(m, b.mask));
}

SelectionResult best_prefix(Oracle& oracle, RunTracker& tracker,
                            const std::vector<SourceId>& order) {
  SourceSet prefix = oracle.empty_set();
  for (const auto id : order) {
    prefix = prefix.with(id);
    tracker.offer("prefix", prefix, oracle.profit(prefix));
  }
  return tracker.finish();
}

}  // namespace

SelectionResult select_naive(Oracle& oracle, const NaiveParams& params) {
  const std::size_t m = oracle.source_count();
  const std::uint64_t total = nonempty_subset_count(m);
  if (params.max_evaluations && total > *params.max_evaluations) {
    throw Error(ErrorCode::BudgetExceeded, "naive search needs " + std::to_string(total) +
                                               " evaluations, guard is " +
                                               std::to_string(*params.max_evaluations));
  }
  RunTracker tracker(oracle, "naive");
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<Candidate> block_best(blocks);
  parallel_for(0, blocks, params.threads, [&](std::size_t b) {
    Candidate best;
    const std::uint64_t first = 1 + b * kBlock;
    const std::uint64_t last = std::min(total, first + kBlock - 1);
    for (std::uint64_t mask = first; mask <= last; ++mask) {
      const Candidate c{mask, oracle.profit(SourceSet::from_mask(m, mask))};
      if (beats(c, best, m)) best = c;
    }
    block_best[b] = best;
  });
  Candidate best;
  for (const auto& c : block_best) {
    if (beats(c, best, m)) best = c;
  }
  tracker.offer("enumeration", SourceSet::from_mask(m, best.mask), best.profit);
  return tracker.finish();
}

SelectionResult select_greedy(Oracle& oracle) {
  const std::size_t m = oracle.source_count();
  RunTracker tracker(oracle, "greedy");
  std::vector<double> individual(m);
  for (std::size_t i = 0; i < m; ++i) {
    individual[i] = oracle.profit(SourceSet::singleton(m, SourceId{i}));
  }
  std::vector<SourceId> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = SourceId{i};
  std::stable_sort(order.begin(), order.end(), [&](SourceId a, SourceId b) {
    return individual[a.index] > individual[b.index];
  });
  return best_prefix(oracle, tracker, order);
}

SelectionResult select_random(Oracle& oracle, std::uint64_t seed) {
  const std::size_t m = oracle.source_count();
  std::vector<SourceId> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = SourceId{i};
  Rng rng(seed);
  rng.shuffle(std::span<SourceId>(order));
  RunTracker tracker(oracle, "random");
  return best_prefix(oracle, tracker, order);
}

}  // namespace srcsel
