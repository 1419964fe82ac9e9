#include "srcsel/core/source_set.hpp"

#include <bit>

#include "srcsel/core/error.hpp"

namespace srcsel {

namespace {

std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

SourceSet::SourceSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}

SourceSet SourceSet::empty(std::size_t width) { return SourceSet(width); }

SourceSet SourceSet::full(std::size_t width) {
  SourceSet s(width);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    const std::size_t bits = std::min<std::size_t>(64, width - w * 64);
    s.words_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }
  return s;
}

SourceSet SourceSet::singleton(std::size_t width, SourceId id) { return empty(width).with(id); }

SourceSet SourceSet::from_ids(std::size_t width, const std::vector<SourceId>& ids) {
  SourceSet s(width);
  for (const auto id : ids) {
    s.check_id(id);
    s.words_[id.index / 64] |= std::uint64_t{1} << (id.index % 64);
  }
  return s;
}

SourceSet SourceSet::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > 64) throw Error(ErrorCode::InvalidArgument, "from_mask requires width <= 64");
  SourceSet s(width);
  if ((mask & ~full(width).mask()) != 0) {
    throw Error(ErrorCode::InvalidArgument, "mask has bits beyond catalog width");
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

SourceSet SourceSet::from_hex(std::size_t width, std::string_view hex) {
  if (hex.empty()) throw Error(ErrorCode::InvalidArgument, "empty hex mask");
  SourceSet s(width);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const int d = hex_digit(*it);
    if (d < 0) throw Error(ErrorCode::InvalidArgument, "bad hex mask '" + std::string(hex) + "'");
    for (int b = 0; b < 4; ++b) {
      if ((d >> b & 1) == 0) continue;
      const std::size_t pos = bit + static_cast<std::size_t>(b);
      if (pos >= width) {
        throw Error(ErrorCode::InvalidArgument,
                    "hex mask '" + std::string(hex) + "' exceeds catalog width");
      }
      s.words_[pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }
  return s;
}

std::size_t SourceSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SourceSet::is_empty() const noexcept {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool SourceSet::contains(SourceId id) const {
  check_id(id);
  return (words_[id.index / 64] >> (id.index % 64) & 1) != 0;
}

SourceSet SourceSet::with(SourceId id) const {
  check_id(id);
  SourceSet s = *this;
  s.words_[id.index / 64] |= std::uint64_t{1} << (id.index % 64);
  return s;
}

SourceSet SourceSet::without(SourceId id) const {
  check_id(id);
  SourceSet s = *this;
  s.words_[id.index / 64] &= ~(std::uint64_t{1} << (id.index % 64));
  return s;
}

SourceSet SourceSet::operator|(const SourceSet& other) const {
  check_same_catalog(other);
  SourceSet s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] |= other.words_[w];
  return s;
}

SourceSet SourceSet::operator-(const SourceSet& other) const {
  check_same_catalog(other);
  SourceSet s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= ~other.words_[w];
  return s;
}

SourceSet SourceSet::operator&(const SourceSet& other) const {
  check_same_catalog(other);
  SourceSet s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= other.words_[w];
  return s;
}

SourceSet SourceSet::complement() const { return full(width_) - *this; }

std::vector<SourceId> SourceSet::members() const {
  std::vector<SourceId> ids;
  ids.reserve(size());
  for_each([&](SourceId id) { ids.push_back(id); });
  return ids;
}

std::string SourceSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t w = words_.size(); w-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const auto d = static_cast<unsigned>(words_[w] >> (nib * 4) & 0xF);
      if (out.empty() && d == 0) continue;
      out.push_back(kDigits[d]);
    }
  }
  return out.empty() ? "0" : out;
}

std::size_t SourceSet::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ width_;
  for (const auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const SourceSet& a, const SourceSet& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void SourceSet::check_same_catalog(const SourceSet& other) const {
  if (width_ != other.width_) {
    throw Error(ErrorCode::InvalidArgument, "source sets belong to catalogs of different width");
  }
}

void SourceSet::check_id(SourceId id) const {
  if (id.index >= width_) {
    throw Error(ErrorCode::InvalidArgument,
                "source id " + std::to_string(id.index) + " outside catalog of width " +
                    std::to_string(width_));
  }
}

bool canonical_less(const SourceSet& a, const SourceSet& b) {
  const auto na = a.size();
  const auto nb = b.size();
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace srcsel
