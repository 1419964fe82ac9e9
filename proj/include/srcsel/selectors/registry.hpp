#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srcsel/selectors/baselines.hpp"
#include "srcsel/selectors/datamodel.hpp"
#include "srcsel/selectors/grasp.hpp"
#include "srcsel/selectors/splice.hpp"

namespace srcsel {

enum class Algorithm { Naive, Greedy, Random, Grasp, Splice, Datamodel };

std::string_view to_string(Algorithm a);
// Throws ConfigError for unknown names.
Algorithm parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();
// Algorithms whose result depends on a seed.
bool is_stochastic(Algorithm a);

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::Splice;
  NaiveParams naive;
  GraspParams grasp;
  SpliceParams splice;
  // 0 picks min(2^m - 1, 1000).
  std::size_t datamodel_samples = 0;
};

std::size_t default_datamodel_samples(std::size_t m);

// Dispatches to the selected algorithm; `seed` overrides the seed of the
// stochastic ones.
SelectionResult run_algorithm(Oracle& oracle, const AlgorithmConfig& config, std::uint64_t seed);

}  // namespace srcsel
