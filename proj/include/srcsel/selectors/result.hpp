#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "srcsel/core/cost.hpp"
#include "srcsel/core/source_set.hpp"
#include "srcsel/oracle/oracle.hpp"

namespace srcsel {

inline constexpr double kNoProfit = -std::numeric_limits<double>::infinity();

// A subset together with its profit; the profit is kNoProfit when the
// subset is empty.
struct PartialSolution {
  SourceSet subset;
  double profit = kNoProfit;
};

struct TraceStep {
  std::string label;
  SourceSet subset;
  double profit = 0.0;
};

struct SelectionResult {
  std::string algorithm;
  SourceSet subset;
  ProfitBreakdown breakdown;
  std::size_t models_explored = 0;
  // Successive improvements of the incumbent, strictly increasing in profit.
  std::vector<TraceStep> trace;
  // Set when an exploration budget stopped the run; `subset` is then the
  // best subset evaluated before the budget ran out.
  bool budget_exhausted = false;
};

// Bookkeeping shared by the selectors: the incumbent, its improvement
// trace, and the exploration count relative to the start of the run.
class RunTracker {
 public:
  RunTracker(Oracle& oracle, std::string algorithm);

  // Adopts `subset` if its profit strictly exceeds the incumbent's.
  bool offer(const std::string& label, const SourceSet& subset, double profit);
  bool has_incumbent() const { return incumbent_.has_value(); }
  const PartialSolution& incumbent() const { return *incumbent_; }

  SelectionResult finish() const;

 private:
  Oracle& oracle_;
  std::string algorithm_;
  std::size_t explored_at_start_;
  std::optional<PartialSolution> incumbent_;
  std::vector<TraceStep> trace_;
};

// Runs `select` with the oracle's exploration budget set to
// `max_evaluations` new models. If the budget runs out the result is the
// best subset the run had evaluated by then.
SelectionResult run_within_budget(Oracle& oracle, std::size_t max_evaluations,
                                  const std::string& algorithm,
                                  const std::function<SelectionResult(Oracle&)>& select);

}  // namespace srcsel
