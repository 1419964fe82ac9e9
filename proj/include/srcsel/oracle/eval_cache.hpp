#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srcsel/core/cost.hpp"
#include "srcsel/core/source_set.hpp"

namespace srcsel {

// Memo table of evaluated subsets. The number of distinct keys is the
// number of models trained ("models explored"). Safe for concurrent use;
// concurrent inserts of the same key keep the last value, which is
// identical because evaluations are deterministic.
class EvalCache {
 public:
  EvalCache() = default;
  EvalCache(const EvalCache&) = delete;
  EvalCache& operator=(const EvalCache&) = delete;

  // Counts a hit or a miss.
  std::optional<ProfitBreakdown> lookup(const SourceSet& s) const;
  // Does not touch the hit/miss counters.
  std::optional<ProfitBreakdown> peek(const SourceSet& s) const;
  void store(const SourceSet& s, const ProfitBreakdown& value);

  std::size_t size() const;
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }

  // All entries in ascending mask order.
  std::vector<std::pair<SourceSet, ProfitBreakdown>> entries() const;
  std::uint64_t fingerprint() const;

  // One line per entry: `mask_hex, gain, cost, profit`.
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path, std::size_t width);

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<SourceSet, ProfitBreakdown> table_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace srcsel
