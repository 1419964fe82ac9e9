#include "srcsel/core/catalog.hpp"

#include <unordered_set>

#include "srcsel/core/error.hpp"

namespace srcsel {

SourceCatalog::SourceCatalog(std::vector<std::pair<std::string, std::size_t>> named_counts) {
  std::unordered_set<std::string> seen;
  entries_.reserve(named_counts.size());
  for (std::size_t i = 0; i < named_counts.size(); ++i) {
    auto& [name, count] = named_counts[i];
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::DuplicateSourceName, "source name '" + name + "' appears twice");
    }
    entries_.push_back(SourceEntry{SourceId{i}, std::move(name), count});
  }
}

const SourceEntry& SourceCatalog::at(SourceId id) const {
  if (id.index >= entries_.size()) {
    throw Error(ErrorCode::InvalidArgument, "unknown source id " + std::to_string(id.index));
  }
  return entries_[id.index];
}

std::optional<SourceId> SourceCatalog::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::string SourceCatalog::describe(const SourceSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](SourceId id) {
    if (!first) out += ",";
    out += at(id).name;
    first = false;
  });
  return out + "}";
}

}  // namespace srcsel
