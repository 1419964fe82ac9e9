#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>

#include "srcsel/core/cost.hpp"
#include "srcsel/core/source_set.hpp"
#include "srcsel/oracle/eval_cache.hpp"

namespace srcsel {

// Computes the task gain of a subset from scratch. Implementations must be
// deterministic and safe to call concurrently.
class GainModel {
 public:
  virtual ~GainModel() = default;
  virtual std::size_t source_count() const = 0;
  virtual double gain(const SourceSet& subset) const = 0;
};

struct EvaluatedSubset {
  SourceSet subset;
  ProfitBreakdown breakdown;
};

// The profit function every selector queries. Wraps a GainModel with the
// cost polynomial and a memo table; each cache miss is one explored model.
class Oracle {
 public:
  Oracle(std::shared_ptr<const GainModel> model, CostModel costs,
         std::shared_ptr<EvalCache> cache = nullptr);

  std::size_t source_count() const { return model_->source_count(); }
  SourceSet empty_set() const { return SourceSet::empty(source_count()); }
  SourceSet all() const { return SourceSet::full(source_count()); }

  // Throws EmptySubset for the empty set and BudgetExceeded when a miss
  // would exceed the exploration budget.
  ProfitBreakdown evaluate(const SourceSet& subset);
  double profit(const SourceSet& subset) { return evaluate(subset).profit; }
  double gain(const SourceSet& subset) { return evaluate(subset).gain; }
  // Cost of one source; evaluates its singleton unless costs are disabled.
  double individual_cost(SourceId id);

  const CostModel& costs() const { return costs_; }
  EvalCache& cache() { return *cache_; }
  const EvalCache& cache() const { return *cache_; }
  std::size_t explored() const { return cache_->size(); }

  // Caps the number of distinct evaluations held by the cache.
  void set_budget(std::optional<std::size_t> max_explored) { budget_ = max_explored; }
  std::optional<std::size_t> budget() const { return budget_; }

  // Values already known elsewhere (for example a ground-truth run over the
  // same data). A miss found here is copied instead of retrained but still
  // counts as explored.
  void set_warm_store(std::shared_ptr<const EvalCache> store) { warm_ = std::move(store); }

  // Best subset queried through this oracle so far (ties: canonical order).
  std::optional<EvaluatedSubset> best_evaluated() const;
  void reset_best();

 private:
  ProfitBreakdown compute(const SourceSet& subset);
  void note_candidate(const SourceSet& subset, const ProfitBreakdown& value);

  std::shared_ptr<const GainModel> model_;
  CostModel costs_;
  std::shared_ptr<EvalCache> cache_;
  std::shared_ptr<const EvalCache> warm_;
  std::optional<std::size_t> budget_;
  mutable std::mutex best_mu_;
  std::optional<EvaluatedSubset> best_;
};

}  // namespace srcsel
