#pragma once

#include <Eigen/Dense>

#include "srcsel/oracle/task.hpp"

namespace srcsel {

// Per-column affine map fitted on training rows. Zero-variance columns get
// scale 1 so they pass through centred rather than failing.
class Standardizer {
 public:
  static Standardizer fit(const Eigen::MatrixXd& x);
  static Standardizer identity(Eigen::Index cols);

  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
  const Eigen::RowVectorXd& mean() const { return mean_; }
  const Eigen::RowVectorXd& scale() const { return scale_; }

 private:
  Eigen::RowVectorXd mean_;
  Eigen::RowVectorXd scale_;
};

struct LinearWeights {
  Eigen::VectorXd coef;
  double intercept = 0.0;
  int iterations = 0;
  bool converged = false;

  Eigen::VectorXd decision(const Eigen::MatrixXd& x) const;
};

// Mean logistic loss with an L2 penalty (ridge/2)*|coef|^2 on the
// coefficients only. Parameters are packed as [coef..., intercept].
class LogisticObjective {
 public:
  LogisticObjective(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double ridge);

  double loss(const Eigen::VectorXd& theta) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& theta) const;
  Eigen::Index dimension() const { return x_.cols() + 1; }

 private:
  const Eigen::MatrixXd& x_;
  const Eigen::VectorXd& y_;
  double ridge_;
};

// Full-batch gradient descent from zero. Stops when the gradient norm drops
// to cfg.gradient_tolerance or after cfg.max_iterations steps. `x` is used as
// given; standardization is the caller's job. Throws NonBinaryLabels.
LinearWeights fit_logistic(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           const TrainerConfig& cfg);

// Solves (X'X + ridge*I) w = X'y. No intercept is added; append a column of
// ones for one. Throws SingularSystem when ridge == 0 and X'X is
// rank-deficient.
Eigen::VectorXd fit_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double ridge);
// Row-weighted variant: (X'WX + ridge*I) w = X'Wy.
Eigen::VectorXd fit_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           const Eigen::VectorXd& row_weights, double ridge);

double sigmoid(double z);

}  // namespace srcsel
