#pragma once

#include <cstddef>
#include <vector>

#include "srcsel/oracle/oracle.hpp"
#include "srcsel/selectors/result.hpp"

namespace srcsel {

// How the value of adding an inactive source is measured within one swap
// round.
enum class AddValuation {
  // addVal(s) = P(A + s) - P(A) against the active set as it entered the
  // round.
  AgainstActive,
  // addVal(s) = P(A' + s) - P(A') where A' is the active set after this
  // round's removals.
  AfterRemoval,
};

struct SpliceParams {
  std::size_t s_max = 0;  // 0 means m; larger values are clamped to m
  std::size_t k_max = 7;
  AddValuation valuation = AddValuation::AgainstActive;
};

// One splicing pass. For k = 1..k_max (while k <= min(|A|, |I|)) swaps the
// k active sources with the lowest rmVal(s) = P(A) - P(A \ s) for the k
// inactive sources with the highest addVal, ties by ascending id. The
// active set changes cumulatively across rounds. Returns the best active
// set seen, which is the input unless a round strictly improved on it.
PartialSolution splice(Oracle& oracle, const SourceSet& active, std::size_t k_max,
                       AddValuation valuation = AddValuation::AgainstActive);

struct FixedSupportResult {
  SourceSet subset;
  double profit = kNoProfit;
  std::size_t splice_calls = 0;
};

// Repeats splice(active, min(k_max, |active|)) until the active set stops
// changing.
FixedSupportResult fixed_support(Oracle& oracle, const SourceSet& active, std::size_t k_max,
                                 AddValuation valuation = AddValuation::AgainstActive);

// For i = 1..s_max seeds the active set with the i most profitable single
// sources and runs fixed_support; returns the best fixpoint.
SelectionResult select_splice(Oracle& oracle, const SpliceParams& params);

}  // namespace srcsel
