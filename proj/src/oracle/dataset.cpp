#include "srcsel/oracle/dataset.hpp"

#include <cmath>
#include <cstring>
#include <numeric>

#include "srcsel/core/error.hpp"
#include "srcsel/core/random.hpp"

namespace srcsel {

namespace {

void fnv_mix(std::uint64_t& h, const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

Partition take_rows(const Partition& src, const std::vector<std::size_t>& rows) {
  Partition out;
  const auto n = static_cast<Eigen::Index>(rows.size());
  out.features.resize(n, src.features.cols());
  out.labels.resize(n);
  if (src.sensitive) out.sensitive = Eigen::VectorXd(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto from = static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)]);
    out.features.row(r) = src.features.row(from);
    out.labels(r) = src.labels(from);
    if (src.sensitive) (*out.sensitive)(r) = (*src.sensitive)(from);
  }
  return out;
}

Partition concat(const std::vector<const Partition*>& parts, Eigen::Index cols, bool sensitive) {
  Eigen::Index total = 0;
  for (const auto* p : parts) total += static_cast<Eigen::Index>(p->rows());
  Partition out;
  out.features.resize(total, cols);
  out.labels.resize(total);
  if (sensitive) out.sensitive = Eigen::VectorXd(total);
  Eigen::Index at = 0;
  for (const auto* p : parts) {
    const auto n = static_cast<Eigen::Index>(p->rows());
    if (n == 0) continue;
    out.features.middleRows(at, n) = p->features;
    out.labels.segment(at, n) = p->labels;
    if (sensitive) out.sensitive->segment(at, n) = *p->sensitive;
    at += n;
  }
  return out;
}

}  // namespace

std::uint64_t fingerprint(const Partition& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto rows = static_cast<std::uint64_t>(p.features.rows());
  const auto cols = static_cast<std::uint64_t>(p.features.cols());
  fnv_mix(h, &rows, sizeof rows);
  fnv_mix(h, &cols, sizeof cols);
  fnv_mix(h, p.features.data(), sizeof(double) * static_cast<std::size_t>(p.features.size()));
  fnv_mix(h, p.labels.data(), sizeof(double) * static_cast<std::size_t>(p.labels.size()));
  if (p.sensitive) {
    fnv_mix(h, p.sensitive->data(), sizeof(double) * static_cast<std::size_t>(p.sensitive->size()));
  }
  return h;
}

std::uint64_t SplitDataset::test_fingerprint() const { return fingerprint(test); }

SplitDataset split_sources(const std::vector<RawSource>& sources, double test_fraction,
                           std::uint64_t seed) {
  if (sources.empty()) throw Error(ErrorCode::EmptyInput, "no sources to split");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "test_fraction must lie in (0, 1)");
  }
  const auto cols = sources.front().data.features.cols();
  const bool sensitive = sources.front().data.sensitive.has_value();

  SplitDataset out;
  std::vector<Partition> test_slices;
  test_slices.reserve(sources.size());
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const auto& src = sources[s];
    const std::size_t n = src.data.rows();
    if (n == 0) throw Error(ErrorCode::EmptySource, "source '" + src.name + "' has no rows");
    if (n < 2) {
      throw Error(ErrorCode::DegenerateSplit, "source '" + src.name + "' has fewer than 2 rows");
    }
    if (src.data.features.cols() != cols || src.data.sensitive.has_value() != sensitive ||
        static_cast<std::size_t>(src.data.features.rows()) != n) {
      throw Error(ErrorCode::InvalidArgument, "source '" + src.name + "' has a different shape");
    }
    const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
    if (n_test < 1 || n_test >= n) {
      throw Error(ErrorCode::DegenerateSplit,
                  "source '" + src.name + "' cannot be split with test_fraction " +
                      std::to_string(test_fraction));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed, s);
    rng.shuffle(std::span<std::size_t>(order));
    std::vector<std::size_t> test_rows(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
    std::vector<std::size_t> train_rows(order.begin() + static_cast<std::ptrdiff_t>(n_test), order.end());
    test_slices.push_back(take_rows(src.data, test_rows));
    out.train.push_back(take_rows(src.data, train_rows));
    out.test_rows_per_source.push_back(n_test);
  }
  std::vector<const Partition*> parts;
  for (const auto& p : test_slices) parts.push_back(&p);
  out.test = concat(parts, cols, sensitive);
  return out;
}

Partition assemble_training(const SourceSet& subset, const SplitDataset& data) {
  if (subset.is_empty()) throw Error(ErrorCode::EmptySubset, "cannot train on an empty subset");
  if (subset.width() != data.source_count()) {
    throw Error(ErrorCode::InvalidArgument, "subset width does not match the dataset");
  }
  std::vector<const Partition*> parts;
  subset.for_each([&](SourceId id) { parts.push_back(&data.train[id.index]); });
  return concat(parts, data.test.features.cols(), data.test.sensitive.has_value());
}

}  // namespace srcsel
