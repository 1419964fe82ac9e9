#include "srcsel/selectors/result.hpp"

#include "srcsel/core/error.hpp"

namespace srcsel {

RunTracker::RunTracker(Oracle& oracle, std::string algorithm)
    : oracle_(oracle), algorithm_(std::move(algorithm)), explored_at_start_(oracle.explored()) {}

bool RunTracker::offer(const std::string& label, const SourceSet& subset, double profit) {
  if (subset.is_empty()) return false;
  if (incumbent_ && !(profit > incumbent_->profit)) return false;
  incumbent_ = PartialSolution{subset, profit};
  trace_.push_back(TraceStep{label, subset, profit});
  return true;
}

SelectionResult RunTracker::finish() const {
  if (!incumbent_) throw Error(ErrorCode::EmptySubset, algorithm_ + " produced no subset");
  SelectionResult r;
  r.algorithm = algorithm_;
  r.subset = incumbent_->subset;
  r.breakdown = oracle_.evaluate(incumbent_->subset);
  r.models_explored = oracle_.explored() - explored_at_start_;
  r.trace = trace_;
  return r;
}

SelectionResult run_within_budget(Oracle& oracle, std::size_t max_evaluations,
                                  const std::string& algorithm,
                                  const std::function<SelectionResult(Oracle&)>& select) {
  const auto saved_budget = oracle.budget();
  const std::size_t start = oracle.explored();
  oracle.set_budget(start + max_evaluations);
  oracle.reset_best();
  try {
    auto result = select(oracle);
    oracle.set_budget(saved_budget);
    return result;
  } catch (const Error& e) {
    oracle.set_budget(saved_budget);
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  const auto best = oracle.best_evaluated();
  if (!best) throw Error(ErrorCode::BudgetExceeded, algorithm + " evaluated nothing within budget");
  SelectionResult r;
  r.algorithm = algorithm;
  r.subset = best->subset;
  r.breakdown = best->breakdown;
  r.models_explored = oracle.explored() - start;
  r.trace.push_back(TraceStep{"budget", best->subset, best->breakdown.profit});
  r.budget_exhausted = true;
  return r;
}

}  // namespace srcsel
