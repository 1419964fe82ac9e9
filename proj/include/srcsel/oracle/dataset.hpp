#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srcsel/core/source_set.hpp"

namespace srcsel {

// Rows of one table: features, labels and (for fairness tasks) a binary
// sensitive attribute aligned with the rows.
struct Partition {
  Eigen::MatrixXd features;
  Eigen::VectorXd labels;
  std::optional<Eigen::VectorXd> sensitive;

  std::size_t rows() const { return static_cast<std::size_t>(labels.size()); }
  std::size_t cols() const { return static_cast<std::size_t>(features.cols()); }
};

struct RawSource {
  std::string name;
  Partition data;
};

// Per-source training slices plus one test set pooled from every source.
// The test set never depends on which subset is being evaluated.
struct SplitDataset {
  std::vector<Partition> train;
  Partition test;
  std::vector<std::size_t> test_rows_per_source;

  std::size_t source_count() const { return train.size(); }
  std::size_t feature_count() const { return test.cols(); }
  std::uint64_t test_fingerprint() const;
};

// Shuffles each source with a stream derived from (seed, source index) and
// moves round(test_fraction * n) rows of it into the pooled test set.
// Throws EmptySource or DegenerateSplit.
SplitDataset split_sources(const std::vector<RawSource>& sources, double test_fraction,
                           std::uint64_t seed);

// Train rows of the members of `subset`, concatenated in SourceId order.
Partition assemble_training(const SourceSet& subset, const SplitDataset& data);

std::uint64_t fingerprint(const Partition& p);

}  // namespace srcsel
