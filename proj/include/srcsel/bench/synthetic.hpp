#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "srcsel/core/source_set.hpp"
#include "srcsel/oracle/dataset.hpp"

namespace srcsel {

struct SynthConfig {
  std::size_t m = 8;
  std::size_t n = 2000;
  std::size_t p = 10;
  std::size_t clean_sources = 3;
  double label_noise_clean = 0.02;
  double label_noise_corrupt = 0.45;
  std::uint64_t seed = 0;

  // Throws InvalidArgument.
  void validate() const;
};

// Sources sharing one hidden linear concept y = [w.(x - 0.5) > 0] over
// features uniform on [0,1]^p. Clean sources flip labels with probability
// label_noise_clean, the rest with label_noise_corrupt.
struct SyntheticData {
  std::vector<RawSource> sources;
  SourceSet clean;
  Eigen::VectorXd concept_weights;
};

SyntheticData generate_synthetic(const SynthConfig& cfg);

}  // namespace srcsel
