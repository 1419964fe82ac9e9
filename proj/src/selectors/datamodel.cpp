#include "srcsel/selectors/datamodel.hpp"

#include <numeric>
#include <unordered_set>

#include "srcsel/core/error.hpp"
#include "srcsel/core/random.hpp"
#include "srcsel/oracle/trainer.hpp"

namespace srcsel {

double Datamodel::predict(const SourceSet& subset) const {
  double v = intercept_;
  subset.for_each([&](SourceId id) { v += weights_(static_cast<Eigen::Index>(id.index)); });
  return v;
}

SourceSet Datamodel::argmax() const {
  const auto m = static_cast<std::size_t>(weights_.size());
  SourceSet best = SourceSet::empty(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (weights_(static_cast<Eigen::Index>(i)) > 0.0) best = best.with(SourceId{i});
  }
  if (!best.is_empty() || m == 0) return best;
  Eigen::Index top = 0;
  for (Eigen::Index i = 1; i < weights_.size(); ++i) {
    if (weights_(i) > weights_(top)) top = i;
  }
  return SourceSet::singleton(m, SourceId{static_cast<std::size_t>(top)});
}

Eigen::VectorXd Datamodel::coefficients() const {
  Eigen::VectorXd c(weights_.size() + 1);
  c << weights_, intercept_;
  return c;
}

namespace {

Datamodel fit_impl(const std::vector<ProfitSample>& samples, const Eigen::VectorXd* row_weights,
                   double ridge) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "datamodel needs samples");
  const std::size_t m = samples.front().first.width();
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(m) + 1);
  Eigen::VectorXd target(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& [set, value] = samples[static_cast<std::size_t>(r)];
    if (set.width() != m) throw Error(ErrorCode::InvalidArgument, "mixed catalog widths");
    set.for_each([&](SourceId id) { design(r, static_cast<Eigen::Index>(id.index)) = 1.0; });
    design(r, static_cast<Eigen::Index>(m)) = 1.0;
    target(r) = value;
  }
  const auto solve = [&](double r) {
    return row_weights ? fit_linear(design, target, *row_weights, r)
                       : fit_linear(design, target, r);
  };
  // The ridge only stands in when the plain least-squares system is singular,
  // so full-rank designs are fit without shrinkage.
  Eigen::VectorXd coef;
  try {
    coef = solve(0.0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularSystem) throw;
    if (ridge == 0.0) throw Error(ErrorCode::RankDeficient, "datamodel design is rank-deficient");
    coef = solve(ridge);
  }
  return Datamodel(coef.head(static_cast<Eigen::Index>(m)), coef(static_cast<Eigen::Index>(m)));
}

}  // namespace

Datamodel fit_datamodel(const std::vector<ProfitSample>& samples, double ridge) {
  return fit_impl(samples, nullptr, ridge);
}

Datamodel fit_datamodel(const std::vector<ProfitSample>& samples,
                        const std::vector<double>& sample_weights, double ridge) {
  if (sample_weights.size() != samples.size()) {
    throw Error(ErrorCode::InvalidArgument, "one weight per sample required");
  }
  const Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(sample_weights.data(), static_cast<Eigen::Index>(sample_weights.size()));
  return fit_impl(samples, &w, ridge);
}

std::vector<SourceSet> sample_distinct_subsets(std::size_t m, std::size_t count,
                                               std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "no sources");
  Rng rng(seed);
  std::vector<SourceSet> out;
  out.reserve(count);
  if (m <= 20) {
    const std::uint64_t total = (std::uint64_t{1} << m) - 1;
    if (count > total) {
      throw Error(ErrorCode::SampleSpaceExhausted,
                  std::to_string(count) + " distinct subsets requested, only " +
                      std::to_string(total) + " exist");
    }
    if (2 * count >= total) {
      // Partial Fisher-Yates over every mask.
      std::vector<std::uint64_t> masks(total);
      std::iota(masks.begin(), masks.end(), std::uint64_t{1});
      for (std::size_t i = 0; i < count; ++i) {
        std::swap(masks[i], masks[i + rng.index(masks.size() - i)]);
        out.push_back(SourceSet::from_mask(m, masks[i]));
      }
      return out;
    }
  }
  // Each source joins with probability 1/2; rejecting the empty set and
  // repeats leaves the draw uniform over unseen nonempty subsets.
  std::unordered_set<SourceSet> seen;
  while (out.size() < count) {
    SourceSet s = SourceSet::empty(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (rng.next() >> 63) s = s.with(SourceId{i});
    }
    if (s.is_empty() || !seen.insert(s).second) continue;
    out.push_back(s);
  }
  return out;
}

SelectionResult select_datamodel(Oracle& oracle, const DatamodelParams& params) {
  const std::size_t m = oracle.source_count();
  if (params.training_subsets < m + 1) {
    throw Error(ErrorCode::InvalidArgument, "datamodel needs at least m + 1 training subsets");
  }
  RunTracker tracker(oracle, "datamodel");
  std::vector<ProfitSample> samples;
  samples.reserve(params.training_subsets);
  SourceSet best_sample;
  double best_profit = kNoProfit;
  for (const auto& s : sample_distinct_subsets(m, params.training_subsets, params.seed)) {
    const double p = oracle.profit(s);
    samples.emplace_back(s, p);
    if (best_sample.width() == 0 || p > best_profit ||
        (p == best_profit && canonical_less(s, best_sample))) {
      best_sample = s;
      best_profit = p;
    }
  }
  tracker.offer("best sample", best_sample, best_profit);

  const SourceSet predicted = fit_datamodel(samples).argmax();
  tracker.offer("surrogate argmax", predicted, oracle.profit(predicted));
  return tracker.finish();
}

}  // namespace srcsel
