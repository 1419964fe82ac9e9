#include "srcsel/selectors/registry.hpp"

#include <algorithm>

#include "srcsel/core/error.hpp"

namespace srcsel {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Naive: return "naive";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Random: return "random";
    case Algorithm::Grasp: return "grasp";
    case Algorithm::Splice: return "splice";
    case Algorithm::Datamodel: return "datamodel";
  }
  return "?";
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = {Algorithm::Naive, Algorithm::Greedy,
                                             Algorithm::Random, Algorithm::Grasp,
                                             Algorithm::Splice, Algorithm::Datamodel};
  return all;
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorCode::ConfigError, "unknown algorithm '" + std::string(name) + "'");
}

bool is_stochastic(Algorithm a) {
  return a == Algorithm::Random || a == Algorithm::Grasp || a == Algorithm::Datamodel;
}

std::size_t default_datamodel_samples(std::size_t m) {
  if (m >= 20) return 1000;
  return static_cast<std::size_t>(std::min<std::uint64_t>((std::uint64_t{1} << m) - 1, 1000));
}

SelectionResult run_algorithm(Oracle& oracle, const AlgorithmConfig& config, std::uint64_t seed) {
  switch (config.algorithm) {
    case Algorithm::Naive: return select_naive(oracle, config.naive);
    case Algorithm::Greedy: return select_greedy(oracle);
    case Algorithm::Random: return select_random(oracle, seed);
    case Algorithm::Grasp: {
      auto params = config.grasp;
      params.seed = seed;
      return select_grasp(oracle, params);
    }
    case Algorithm::Splice: return select_splice(oracle, config.splice);
    case Algorithm::Datamodel: {
      DatamodelParams params;
      params.training_subsets = config.datamodel_samples == 0
                                    ? default_datamodel_samples(oracle.source_count())
                                    : config.datamodel_samples;
      params.seed = seed;
      return select_datamodel(oracle, params);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unhandled algorithm");
}

}  // namespace srcsel
