#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srcsel/core/cost.hpp"
#include "srcsel/oracle/task.hpp"
#include "srcsel/selectors/registry.hpp"

namespace srcsel {

enum class InputMode {
  SourcesDir,   // every *.csv in `input` is one source
  SingleCsv,    // one CSV split by `partition_column`
  ProfitTable,  // a saved ground-truth table replayed as the gain function
};

std::string_view to_string(InputMode mode);

struct RunConfig {
  InputMode mode = InputMode::SourcesDir;
  std::filesystem::path input;
  std::optional<std::string> partition_column;
  // Empty means every column that is not the label, sensitive or partition
  // column.
  std::vector<std::string> feature_columns;
  // Feature columns expanded to one indicator per distinct value.
  std::vector<std::string> categorical_columns;
  // Names for the sources of a profit table, in id order.
  std::vector<std::string> source_names;

  TaskSpec task;
  CostModel costs;
  AlgorithmConfig algorithm;
  std::vector<std::uint64_t> seeds;

  std::size_t ground_truth_cap = 20;
  bool force_ground_truth = false;
  std::size_t threads = 1;

  // Throws ConfigError on inconsistent combinations.
  void validate() const;
};

// Flat `key = value` lines; `#` starts a comment. Relative paths resolve
// against `base_dir`. Throws ConfigError naming the offending line.
RunConfig parse_config(std::string_view text,
                       const std::filesystem::path& base_dir = std::filesystem::path());
RunConfig load_config(const std::filesystem::path& path);

// One line per key with its default, for --help.
std::string config_keys_help();

std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace srcsel
