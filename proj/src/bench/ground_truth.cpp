#include "srcsel/bench/ground_truth.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"
#include "srcsel/core/parallel.hpp"

namespace srcsel {

GroundTruthTable::GroundTruthTable(std::size_t m, std::vector<double> profits_by_mask)
    : m_(m), profits_(std::move(profits_by_mask)) {
  if (m_ == 0 || m_ > kGroundTruthHardLimit) {
    throw Error(ErrorCode::InvalidArgument, "ground truth supports 1.." +
                                                std::to_string(kGroundTruthHardLimit) + " sources");
  }
  if (profits_.size() != (std::size_t{1} << m_)) {
    throw Error(ErrorCode::InvalidArgument, "ground truth must cover every subset");
  }
  // Slot 0 stands for the empty set and never takes part in a metric.
  profits_[0] = 0.0;
}

double GroundTruthTable::profit(const SourceSet& s) const {
  if (s.width() != m_ || s.is_empty()) {
    throw Error(ErrorCode::UnknownSubset, "subset " + s.to_hex() + " is not in the table");
  }
  return profits_[s.mask()];
}

SourceSet GroundTruthTable::argmax() const {
  std::uint64_t best = 1;
  for (std::uint64_t mask = 2; mask < profits_.size(); ++mask) {
    if (profits_[mask] > profits_[best] ||
        (profits_[mask] == profits_[best] &&
         canonical_less(SourceSet::from_mask(m_, mask), SourceSet::from_mask(m_, best)))) {
      best = mask;
    }
  }
  return SourceSet::from_mask(m_, best);
}

double GroundTruthTable::max_profit() const { return profits_[argmax().mask()]; }

std::vector<std::pair<SourceSet, double>> GroundTruthTable::entries() const {
  std::vector<std::pair<SourceSet, double>> out;
  out.reserve(size());
  for (std::uint64_t mask = 1; mask < profits_.size(); ++mask) {
    out.emplace_back(SourceSet::from_mask(m_, mask), profits_[mask]);
  }
  return out;
}

std::uint64_t GroundTruthTable::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ m_;
  for (std::size_t mask = 1; mask < profits_.size(); ++mask) {
    std::uint64_t bits;
    std::memcpy(&bits, &profits_[mask], sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

void GroundTruthTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << "m=" << m_ << '\n';
  for (std::uint64_t mask = 1; mask < profits_.size(); ++mask) {
    out << SourceSet::from_mask(m_, mask).to_hex() << ", " << format_real(profits_[mask]) << '\n';
  }
}

GroundTruthTable GroundTruthTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || trim(line).substr(0, 2) != "m=") {
    throw Error(ErrorCode::SchemaMismatch, path.string() + ": missing 'm=<int>' header");
  }
  const auto m = static_cast<std::size_t>(parse_integer(trim(line).substr(2)));
  if (m == 0 || m > kGroundTruthHardLimit) {
    throw Error(ErrorCode::SchemaMismatch, path.string() + ": unsupported source count");
  }
  std::vector<double> profits(std::size_t{1} << m, std::numeric_limits<double>::quiet_NaN());
  std::vector<bool> seen(profits.size(), false);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 2) {
      throw Error(ErrorCode::SchemaMismatch,
                  path.string() + ":" + std::to_string(lineno) + ": expected 'mask_hex, profit'");
    }
    const auto set = SourceSet::from_hex(m, trim(fields[0]));
    if (set.is_empty() || seen[set.mask()]) {
      throw Error(ErrorCode::SchemaMismatch,
                  path.string() + ":" + std::to_string(lineno) + ": empty or duplicate subset");
    }
    seen[set.mask()] = true;
    profits[set.mask()] = parse_real(fields[1]);
  }
  for (std::size_t mask = 1; mask < seen.size(); ++mask) {
    if (!seen[mask]) {
      throw Error(ErrorCode::SchemaMismatch, path.string() + ": table is incomplete");
    }
  }
  return GroundTruthTable(m, std::move(profits));
}

GroundTruthTable build_ground_truth(Oracle& oracle, const GroundTruthOptions& options) {
  const std::size_t m = oracle.source_count();
  if (m > options.cap && !options.force) {
    throw Error(ErrorCode::BudgetExceeded,
                "ground truth over " + std::to_string(m) + " sources exceeds the cap of " +
                    std::to_string(options.cap) + "; pass the force flag to override");
  }
  if (m > kGroundTruthHardLimit) {
    throw Error(ErrorCode::BudgetExceeded, "ground truth is limited to " +
                                               std::to_string(kGroundTruthHardLimit) + " sources");
  }
  std::vector<double> profits(std::size_t{1} << m);
  // Singletons first so multi-source evaluations find their individual
  // gains cached instead of racing to compute them.
  parallel_for(0, m, options.threads, [&](std::size_t i) {
    profits[std::size_t{1} << i] = oracle.profit(SourceSet::singleton(m, SourceId{i}));
  });
  parallel_for(1, profits.size(), options.threads, [&](std::size_t mask) {
    if ((mask & (mask - 1)) == 0) return;
    profits[mask] = oracle.profit(SourceSet::from_mask(m, mask));
  });
  return GroundTruthTable(m, std::move(profits));
}

}  // namespace srcsel
