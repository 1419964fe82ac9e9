#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace srcsel {

struct SourceId {
  std::size_t index = 0;

  friend auto operator<=>(const SourceId&, const SourceId&) = default;
};

// Immutable subset of a catalog of `width` sources, stored as a bitmask.
// Bits at positions >= width are always zero. Binary operations require
// both operands to come from catalogs of the same width.
class SourceSet {
 public:
  SourceSet() = default;

  static SourceSet empty(std::size_t width);
  static SourceSet full(std::size_t width);
  static SourceSet singleton(std::size_t width, SourceId id);
  static SourceSet from_ids(std::size_t width, const std::vector<SourceId>& ids);
  // Only valid for width <= 64.
  static SourceSet from_mask(std::size_t width, std::uint64_t mask);
  // Parses the hex rendering produced by to_hex().
  static SourceSet from_hex(std::size_t width, std::string_view hex);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept;
  bool is_empty() const noexcept;
  bool contains(SourceId id) const;

  SourceSet with(SourceId id) const;
  SourceSet without(SourceId id) const;
  SourceSet operator|(const SourceSet& other) const;
  SourceSet operator-(const SourceSet& other) const;
  SourceSet operator&(const SourceSet& other) const;
  // Complement within the catalog.
  SourceSet complement() const;

  std::vector<SourceId> members() const;
  // Low 64 bits; the full mask when width <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
  // Lower-case hex without prefix or leading zeros; "0" for the empty set.
  std::string to_hex() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(SourceId{w * 64 + static_cast<std::size_t>(bit)});
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const SourceSet& a, const SourceSet& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }
  // Numeric order of the mask value.
  friend std::strong_ordering operator<=>(const SourceSet& a, const SourceSet& b);

 private:
  explicit SourceSet(std::size_t width);
  void check_same_catalog(const SourceSet& other) const;
  void check_id(SourceId id) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

// Canonical tie-break for equal profits: smaller cardinality first, then
// smaller mask value.
bool canonical_less(const SourceSet& a, const SourceSet& b);

}  // namespace srcsel

template <>
struct std::hash<srcsel::SourceSet> {
  std::size_t operator()(const srcsel::SourceSet& s) const noexcept { return s.hash(); }
};
