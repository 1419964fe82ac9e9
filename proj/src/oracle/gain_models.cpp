#include "srcsel/oracle/gain_models.hpp"

#include <iostream>

#include "srcsel/core/error.hpp"
#include "srcsel/oracle/metrics.hpp"
#include "srcsel/oracle/trainer.hpp"

namespace srcsel {

TableGain::TableGain(std::size_t width, std::vector<double> values_by_mask)
    : width_(width), values_(std::move(values_by_mask)) {
  if (width_ == 0 || width_ > 30) {
    throw Error(ErrorCode::InvalidArgument, "table gain supports 1..30 sources");
  }
  if (values_.size() != (std::size_t{1} << width_)) {
    throw Error(ErrorCode::InvalidArgument, "table must hold 2^m entries indexed by mask");
  }
}

double TableGain::gain(const SourceSet& subset) const {
  if (subset.is_empty() || subset.width() != width_) {
    throw Error(ErrorCode::UnknownSubset, "subset " + subset.to_hex() + " not in table");
  }
  return values_[subset.mask()];
}

TrainedModelGain::TrainedModelGain(std::shared_ptr<const SplitDataset> data, TaskSpec task)
    : data_(std::move(data)), task_(std::move(task)) {
  if (!data_ || data_->source_count() == 0) {
    throw Error(ErrorCode::EmptyInput, "no sources in dataset");
  }
  task_.validate();
  const auto& test = data_->test;
  if (task_.kind == TaskKind::Fairness && !test.sensitive) {
    throw Error(ErrorCode::ConfigError, "fairness task requires sensitive values");
  }
  if (task_.kind != TaskKind::Regression) {
    for (Eigen::Index i = 0; i < test.labels.size(); ++i) {
      if (test.labels(i) != 0.0 && test.labels(i) != 1.0) {
        throw Error(ErrorCode::NonBinaryLabels, "classification labels must be 0 or 1");
      }
    }
    if (task_.kind == TaskKind::Fairness) {
      try {
        tpr_gap(test.labels, test.labels, *test.sensitive);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoPositives) throw;
        // The pooled test set is shared by every subset, so the gap is
        // undefined for all of them.
        tpr_undefined_ = true;
        std::clog << "warning: " << e.what() << " in the test set; every TPR gap scores as -1\n";
      }
    }
  } else {
    const double mean = test.labels.mean();
    baseline_mse_ = (test.labels.array() - mean).square().mean();
    if (!(baseline_mse_ > 0.0)) {
      throw Error(ErrorCode::ZeroBaseline, "test labels are constant; regression gain undefined");
    }
  }
}

double TrainedModelGain::gain(const SourceSet& subset) const {
  const Partition train = assemble_training(subset, *data_);
  const auto& cfg = task_.trainer;
  const auto scaler = cfg.standardize ? Standardizer::fit(train.features)
                                      : Standardizer::identity(train.features.cols());
  const Eigen::MatrixXd x_train = scaler.apply(train.features);
  const Eigen::MatrixXd x_test = scaler.apply(data_->test.features);
  const auto& y_test = data_->test.labels;

  if (task_.kind == TaskKind::Regression) {
    Eigen::MatrixXd design(x_train.rows(), x_train.cols() + 1);
    design << x_train, Eigen::VectorXd::Ones(x_train.rows());
    const Eigen::VectorXd w = fit_linear(design, train.labels, cfg.ridge);
    const Eigen::VectorXd pred =
        (x_test * w.head(x_test.cols())).array() + w(x_test.cols());
    return regression_gain(mse(pred, y_test), baseline_mse_);
  }

  const LinearWeights model = fit_logistic(x_train, train.labels, cfg);
  const Eigen::VectorXd z = model.decision(x_test);
  // p >= 0.5 exactly when the decision value is >= 0.
  const Eigen::VectorXd pred = (z.array() >= 0.0).cast<double>();
  const double acc = accuracy(pred, y_test);
  if (task_.kind == TaskKind::Classification) return acc;

  double gap = -1.0;
  if (tpr_undefined_) {
    undefined_tpr_.fetch_add(1);
  } else {
    gap = tpr_gap(pred, y_test, *data_->test.sensitive);
  }
  return fairness_gain(acc, gap, task_.lambda);
}

}  // namespace srcsel
