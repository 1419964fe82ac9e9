#pragma once

#include <cstddef>
#include <cstdint>

#include "srcsel/core/random.hpp"
#include "srcsel/oracle/oracle.hpp"
#include "srcsel/selectors/result.hpp"

namespace srcsel {

struct GraspParams {
  std::size_t iterations = 20;  // N
  std::size_t rcl_size = 5;     // k
  std::uint64_t seed = 0;
};

// Randomized greedy construction. Starting from `selected`, repeatedly
// ranks every unselected source s in `pool` by marginal profit
//   G(selected + s) - G(selected) - C(s)
// keeps the top `rcl_size` (ties by id), adds one of them uniformly at
// random, and records the partial subset whenever its profit beats the
// running best (initially `best_profit`). Runs at most
// |pool \ selected| steps. Returns the best partial subset, or `selected`
// and `best_profit` unchanged when no step improved.
PartialSolution grasp_construction(Oracle& oracle, const SourceSet& pool,
                                   const SourceSet& selected, double best_profit,
                                   std::size_t rcl_size, Rng& rng);

// Drop-one-and-rebuild neighbourhood search. For each member s (id order)
// reruns construction from selected \ s over catalog \ s; the first strict
// improvement is adopted and the scan restarts. Stops when a full scan
// finds none.
PartialSolution grasp_local_search(Oracle& oracle, const SourceSet& selected, double profit,
                                   std::size_t rcl_size, Rng& rng);

// N construction + local-search passes sharing one random stream. Throws
// AllConstructionsEmpty when no pass produced a subset.
SelectionResult select_grasp(Oracle& oracle, const GraspParams& params);

}  // namespace srcsel
