#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "srcsel/oracle/oracle.hpp"

namespace srcsel {

// Profit of every nonempty subset of m sources, indexed by mask.
class GroundTruthTable {
 public:
  GroundTruthTable(std::size_t m, std::vector<double> profits_by_mask);

  std::size_t source_count() const { return m_; }
  std::size_t size() const { return profits_.size() - 1; }
  // Throws UnknownSubset for the empty set or a foreign catalog.
  double profit(const SourceSet& s) const;
  // Canonical argmax (ties: smaller subset, then smaller mask).
  SourceSet argmax() const;
  double max_profit() const;
  // (subset, profit) in ascending mask order.
  std::vector<std::pair<SourceSet, double>> entries() const;
  const std::vector<double>& by_mask() const { return profits_; }
  std::uint64_t fingerprint() const;

  // `m=<int>` header, then `mask_hex, profit` lines in ascending mask order.
  void save(const std::filesystem::path& path) const;
  static GroundTruthTable load(const std::filesystem::path& path);

  friend bool operator==(const GroundTruthTable&, const GroundTruthTable&) = default;

 private:
  std::size_t m_;
  std::vector<double> profits_;
};

struct GroundTruthOptions {
  std::size_t cap = 20;
  bool force = false;
  std::size_t threads = 1;
};

// Largest catalog a table can hold in memory regardless of `force`.
inline constexpr std::size_t kGroundTruthHardLimit = 30;

// Evaluates every nonempty subset through the oracle. Throws BudgetExceeded
// when m exceeds the cap without `force`.
GroundTruthTable build_ground_truth(Oracle& oracle, const GroundTruthOptions& options = {});

}  // namespace srcsel
