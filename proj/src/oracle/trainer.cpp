#include "srcsel/oracle/trainer.hpp"

#include <cmath>

#include "srcsel/core/error.hpp"

namespace srcsel {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

Standardizer Standardizer::fit(const Eigen::MatrixXd& x) {
  Standardizer s;
  const auto n = static_cast<double>(x.rows());
  s.mean_ = x.colwise().mean();
  s.scale_ = Eigen::RowVectorXd::Ones(x.cols());
  if (x.rows() == 0) return s;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var = (x.col(j).array() - s.mean_(j)).square().sum() / n;
    if (var > 0.0) s.scale_(j) = std::sqrt(var);
  }
  return s;
}

Standardizer Standardizer::identity(Eigen::Index cols) {
  Standardizer s;
  s.mean_ = Eigen::RowVectorXd::Zero(cols);
  s.scale_ = Eigen::RowVectorXd::Ones(cols);
  return s;
}

Eigen::MatrixXd Standardizer::apply(const Eigen::MatrixXd& x) const {
  return (x.rowwise() - mean_).array().rowwise() / scale_.array();
}

Eigen::VectorXd LinearWeights::decision(const Eigen::MatrixXd& x) const {
  return (x * coef).array() + intercept;
}

LogisticObjective::LogisticObjective(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                     double ridge)
    : x_(x), y_(y), ridge_(ridge) {}

double LogisticObjective::loss(const Eigen::VectorXd& theta) const {
  const auto p = x_.cols();
  const Eigen::VectorXd z = (x_ * theta.head(p)).array() + theta(p);
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    // log(1 + e^z) - y*z, evaluated without overflow.
    const double zi = z(i);
    total += std::max(zi, 0.0) + std::log1p(std::exp(-std::abs(zi))) - y_(i) * zi;
  }
  return total / static_cast<double>(z.size()) + 0.5 * ridge_ * theta.head(p).squaredNorm();
}

Eigen::VectorXd LogisticObjective::gradient(const Eigen::VectorXd& theta) const {
  const auto p = x_.cols();
  const auto n = static_cast<double>(x_.rows());
  Eigen::VectorXd residual = (x_ * theta.head(p)).array() + theta(p);
  for (Eigen::Index i = 0; i < residual.size(); ++i) residual(i) = sigmoid(residual(i)) - y_(i);
  Eigen::VectorXd g(p + 1);
  g.head(p) = x_.transpose() * residual / n + ridge_ * theta.head(p);
  g(p) = residual.sum() / n;
  return g;
}

LinearWeights fit_logistic(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           const TrainerConfig& cfg) {
  if (x.rows() == 0) throw Error(ErrorCode::EmptyInput, "no training rows");
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) != 0.0 && y(i) != 1.0) {
      throw Error(ErrorCode::NonBinaryLabels, "logistic labels must be 0 or 1");
    }
  }
  const LogisticObjective objective(x, y, cfg.ridge);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(objective.dimension());
  LinearWeights out;
  for (; out.iterations < cfg.max_iterations; ++out.iterations) {
    const Eigen::VectorXd g = objective.gradient(theta);
    if (g.norm() <= cfg.gradient_tolerance) {
      out.converged = true;
      break;
    }
    theta -= cfg.step_size * g;
  }
  out.coef = theta.head(x.cols());
  out.intercept = theta(x.cols());
  return out;
}

namespace {

Eigen::VectorXd solve_normal_equations(Eigen::MatrixXd gram, const Eigen::VectorXd& rhs,
                                       double ridge) {
  if (ridge < 0.0) throw Error(ErrorCode::InvalidArgument, "ridge must be non-negative");
  if (ridge == 0.0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(gram);
    if (qr.rank() < gram.cols()) {
      throw Error(ErrorCode::SingularSystem,
                  "normal equations are rank-deficient; use a positive ridge");
    }
    return qr.solve(rhs);
  }
  gram.diagonal().array() += ridge;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularSystem, "failed to factor the regularized normal equations");
  }
  return ldlt.solve(rhs);
}

}  // namespace

Eigen::VectorXd fit_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double ridge) {
  if (x.rows() == 0) throw Error(ErrorCode::EmptyInput, "no training rows");
  return solve_normal_equations(x.transpose() * x, x.transpose() * y, ridge);
}

Eigen::VectorXd fit_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           const Eigen::VectorXd& row_weights, double ridge) {
  if (x.rows() == 0) throw Error(ErrorCode::EmptyInput, "no training rows");
  const Eigen::MatrixXd wx = row_weights.asDiagonal() * x;
  return solve_normal_equations(x.transpose() * wx, wx.transpose() * y, ridge);
}

}  // namespace srcsel
