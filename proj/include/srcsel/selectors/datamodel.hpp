#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "srcsel/oracle/oracle.hpp"
#include "srcsel/selectors/result.hpp"

namespace srcsel {

struct DatamodelParams {
  std::size_t training_subsets = 0;  // T, at least m + 1
  std::uint64_t seed = 0;
};

// Linear surrogate: predicted profit = intercept + sum of member weights.
class Datamodel {
 public:
  Datamodel(Eigen::VectorXd weights, double intercept)
      : weights_(std::move(weights)), intercept_(intercept) {}

  double predict(const SourceSet& subset) const;
  // Exact maximiser over nonempty subsets with canonical tie-breaking: all
  // strictly positive weights, or the single best source if none is.
  SourceSet argmax() const;

  const Eigen::VectorXd& weights() const { return weights_; }
  double intercept() const { return intercept_; }
  // [w_0, ..., w_{m-1}, intercept]
  Eigen::VectorXd coefficients() const;

 private:
  Eigen::VectorXd weights_;
  double intercept_;
};

using ProfitSample = std::pair<SourceSet, double>;

// Least squares of profit on membership indicators plus an intercept. A
// singular design falls back to the ridge; RankDeficient when ridge == 0.
Datamodel fit_datamodel(const std::vector<ProfitSample>& samples, double ridge = 1e-8);
Datamodel fit_datamodel(const std::vector<ProfitSample>& samples,
                        const std::vector<double>& sample_weights, double ridge = 1e-8);

// T distinct nonempty subsets drawn uniformly. Throws SampleSpaceExhausted
// when T exceeds the number of nonempty subsets.
std::vector<SourceSet> sample_distinct_subsets(std::size_t m, std::size_t count,
                                               std::uint64_t seed);

// Evaluates T sampled subsets, fits the surrogate, evaluates its argmax,
// and returns the better of that and the best sample.
SelectionResult select_datamodel(Oracle& oracle, const DatamodelParams& params);

}  // namespace srcsel
