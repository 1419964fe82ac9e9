#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srcsel/core/source_set.hpp"

namespace srcsel {

struct SourceEntry {
  SourceId id;
  std::string name;
  std::size_t record_count = 0;
};

// Ordered, immutable list of sources. Ids are dense and equal to position.
class SourceCatalog {
 public:
  SourceCatalog() = default;
  // Throws DuplicateSourceName when two names collide.
  explicit SourceCatalog(std::vector<std::pair<std::string, std::size_t>> named_counts);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<SourceEntry>& entries() const noexcept { return entries_; }
  const SourceEntry& at(SourceId id) const;
  std::optional<SourceId> find(const std::string& name) const;

  SourceSet empty_set() const { return SourceSet::empty(size()); }
  SourceSet all() const { return SourceSet::full(size()); }
  // "{a,b}" using catalog names, members in id order.
  std::string describe(const SourceSet& s) const;

 private:
  std::vector<SourceEntry> entries_;
};

}  // namespace srcsel
