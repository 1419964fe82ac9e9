#include "srcsel/selectors/splice.hpp"

#include <algorithm>

#include "srcsel/core/error.hpp"

namespace srcsel {

namespace {

struct Valued {
  SourceId id;
  double value;
};

// Stable sort keeps ascending-id order among equal values because inputs
// are produced in id order.
std::vector<SourceId> lowest(std::vector<Valued> values, std::size_t k) {
  std::stable_sort(values.begin(), values.end(),
                   [](const Valued& a, const Valued& b) { return a.value < b.value; });
  std::vector<SourceId> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(values[i].id);
  return out;
}

std::vector<SourceId> highest(std::vector<Valued> values, std::size_t k) {
  std::stable_sort(values.begin(), values.end(),
                   [](const Valued& a, const Valued& b) { return a.value > b.value; });
  std::vector<SourceId> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(values[i].id);
  return out;
}

}  // namespace

PartialSolution splice(Oracle& oracle, const SourceSet& active, std::size_t k_max,
                       AddValuation valuation) {
  if (active.is_empty()) throw Error(ErrorCode::EmptySubset, "splice needs a nonempty active set");
  if (k_max == 0) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  const SourceSet catalog = oracle.all();
  PartialSolution best{active, oracle.profit(active)};
  SourceSet a = active;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const SourceSet inactive = catalog - a;
    if (k > std::min(a.size(), inactive.size())) break;

    const double p_active = oracle.profit(a);
    std::vector<Valued> rm_val;
    a.for_each([&](SourceId s) {
      const SourceSet rest = a.without(s);
      // P(empty) is undefined; with a single member the ranking is moot.
      rm_val.push_back(Valued{s, rest.is_empty() ? p_active : p_active - oracle.profit(rest)});
    });
    const auto leaving = lowest(std::move(rm_val), k);

    SourceSet base = a;
    if (valuation == AddValuation::AfterRemoval) {
      for (const auto s : leaving) base = base.without(s);
    }
    const double p_base = base.is_empty() ? 0.0 : oracle.profit(base);
    std::vector<Valued> add_val;
    inactive.for_each([&](SourceId s) {
      add_val.push_back(Valued{s, oracle.profit(base.with(s)) - p_base});
    });
    const auto entering = highest(std::move(add_val), k);

    for (const auto s : leaving) a = a.without(s);
    for (const auto s : entering) a = a.with(s);

    const double p = oracle.profit(a);
    if (p > best.profit) best = PartialSolution{a, p};
  }
  return best;
}

FixedSupportResult fixed_support(Oracle& oracle, const SourceSet& active, std::size_t k_max,
                                 AddValuation valuation) {
  FixedSupportResult out;
  SourceSet previous;
  SourceSet current = active;
  do {
    previous = current;
    const auto step =
        splice(oracle, previous, std::min(k_max, previous.size()), valuation);
    ++out.splice_calls;
    current = step.subset;
    out.profit = step.profit;
  } while (current != previous);
  out.subset = current;
  return out;
}

SelectionResult select_splice(Oracle& oracle, const SpliceParams& params) {
  const std::size_t m = oracle.source_count();
  const std::size_t s_max = params.s_max == 0 ? m : std::min(params.s_max, m);
  if (params.k_max == 0) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");

  RunTracker tracker(oracle, "splice");
  std::vector<Valued> individual;
  for (std::size_t i = 0; i < m; ++i) {
    individual.push_back(Valued{SourceId{i}, oracle.profit(SourceSet::singleton(m, SourceId{i}))});
  }
  const auto ranked = highest(individual, m);

  SourceSet seed = oracle.empty_set();
  for (std::size_t i = 1; i <= s_max; ++i) {
    seed = seed.with(ranked[i - 1]);
    const auto fixpoint = fixed_support(oracle, seed, params.k_max, params.valuation);
    tracker.offer("size " + std::to_string(i), fixpoint.subset, fixpoint.profit);
  }
  return tracker.finish();
}

}  // namespace srcsel
