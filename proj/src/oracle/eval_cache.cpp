#include "srcsel/oracle/eval_cache.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <mutex>

#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"

namespace srcsel {

std::optional<ProfitBreakdown> EvalCache::lookup(const SourceSet& s) const {
  auto found = peek(s);
  (found ? hits_ : misses_).fetch_add(1);
  return found;
}

std::optional<ProfitBreakdown> EvalCache::peek(const SourceSet& s) const {
  std::shared_lock lock(mu_);
  const auto it = table_.find(s);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void EvalCache::store(const SourceSet& s, const ProfitBreakdown& value) {
  std::unique_lock lock(mu_);
  table_.insert_or_assign(s, value);
}

std::size_t EvalCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

std::vector<std::pair<SourceSet, ProfitBreakdown>> EvalCache::entries() const {
  std::vector<std::pair<SourceSet, ProfitBreakdown>> out;
  {
    std::shared_lock lock(mu_);
    out.assign(table_.begin(), table_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::uint64_t EvalCache::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  auto bits = [](double d) {
    std::uint64_t u;
    std::memcpy(&u, &d, sizeof u);
    return u;
  };
  for (const auto& [set, value] : entries()) {
    mix(set.hash());
    mix(bits(value.gain));
    mix(bits(value.cost));
    mix(bits(value.profit));
  }
  return h;
}

void EvalCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  for (const auto& [set, v] : entries()) {
    out << set.to_hex() << ", " << format_real(v.gain) << ", " << format_real(v.cost) << ", "
        << format_real(v.profit) << '\n';
  }
}

void EvalCache::load(const std::filesystem::path& path, std::size_t width) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw Error(ErrorCode::SchemaMismatch,
                  path.string() + ":" + std::to_string(lineno) + ": expected 4 fields");
    }
    const auto set = SourceSet::from_hex(width, trim(fields[0]));
    store(set, ProfitBreakdown{parse_real(fields[1]), parse_real(fields[2]), parse_real(fields[3])});
  }
}

}  // namespace srcsel
