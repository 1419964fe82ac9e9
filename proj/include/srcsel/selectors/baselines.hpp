#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "srcsel/oracle/oracle.hpp"
#include "srcsel/selectors/result.hpp"

namespace srcsel {

struct NaiveParams {
  // Refuse to start when 2^m - 1 exceeds this many evaluations.
  std::optional<std::size_t> max_evaluations;
  std::size_t threads = 1;
};

// Exhaustive search over all nonempty subsets (m <= 63). Ties go to the
// smaller subset, then the smaller mask. Throws BudgetExceeded.
SelectionResult select_naive(Oracle& oracle, const NaiveParams& params = {});

// Ranks sources by individual profit (descending, ties by id) and returns
// the best prefix of that order.
SelectionResult select_greedy(Oracle& oracle);

// Best prefix of one seeded uniform permutation of the sources.
SelectionResult select_random(Oracle& oracle, std::uint64_t seed);

// Number of nonempty subsets of m sources; requires m <= 63.
std::uint64_t nonempty_subset_count(std::size_t m);

}  // namespace srcsel
