#include "srcsel/oracle/metrics.hpp"

#include <algorithm>

#include "srcsel/core/error.hpp"

namespace srcsel {

namespace {

void check_lengths(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
  if (pred.size() == 0) throw Error(ErrorCode::EmptyInput, "metric over zero predictions");
  if (pred.size() != truth.size()) {
    throw Error(ErrorCode::InvalidArgument, "prediction and label vectors differ in length");
  }
}

}  // namespace

double accuracy(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
  check_lengths(pred, truth);
  const auto matches = (pred.array() == truth.array()).count();
  return 100.0 * static_cast<double>(matches) / static_cast<double>(pred.size());
}

double tpr_gap(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth,
               const Eigen::VectorXd& sensitive) {
  check_lengths(pred, truth);
  if (sensitive.size() != truth.size()) {
    throw Error(ErrorCode::InvalidArgument, "sensitive vector differs in length");
  }
  double positives[2] = {0, 0};
  double hits[2] = {0, 0};
  for (Eigen::Index i = 0; i < truth.size(); ++i) {
    if (truth(i) != 1.0) continue;
    const int group = sensitive(i) == 1.0 ? 1 : 0;
    positives[group] += 1;
    if (pred(i) == 1.0) hits[group] += 1;
  }
  for (int g = 0; g < 2; ++g) {
    if (positives[g] == 0) {
      throw Error(ErrorCode::NoPositives, "group a=" + std::to_string(g) + " has no positive labels");
    }
  }
  return hits[0] / positives[0] - hits[1] / positives[1];
}

double fairness_gain(double accuracy_pct, double gap, double lambda) {
  return std::clamp(accuracy_pct + lambda * gap, 0.0, 100.0);
}

double mse(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
  check_lengths(pred, truth);
  return (pred - truth).squaredNorm() / static_cast<double>(pred.size());
}

double regression_gain(double model_mse, double baseline_mse) {
  if (!(baseline_mse > 0.0)) {
    throw Error(ErrorCode::ZeroBaseline, "test labels are constant; regression gain undefined");
  }
  return 100.0 * std::clamp(1.0 - model_mse / baseline_mse, 0.0, 1.0);
}

}  // namespace srcsel
