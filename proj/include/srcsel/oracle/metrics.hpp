#pragma once

#include <Eigen/Dense>

namespace srcsel {

// Percentage of positions where pred == truth. Throws EmptyInput.
double accuracy(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

// P(pred=1 | a=0, y=1) - P(pred=1 | a=1, y=1): protected group (a=0) minus
// privileged group (a=1). Throws NoPositives when either group has no
// positive-labelled rows.
double tpr_gap(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth,
               const Eigen::VectorXd& sensitive);

// clamp(A + lambda * gap, 0, 100).
double fairness_gain(double accuracy_pct, double gap, double lambda);

double mse(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

// 100 * clamp(1 - model/baseline, 0, 1). Throws ZeroBaseline.
double regression_gain(double model_mse, double baseline_mse);

}  // namespace srcsel
