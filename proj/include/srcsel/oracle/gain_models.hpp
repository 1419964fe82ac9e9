#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <vector>

#include "srcsel/oracle/dataset.hpp"
#include "srcsel/oracle/oracle.hpp"
#include "srcsel/oracle/task.hpp"

namespace srcsel {

// Explicit value per nonempty subset, indexed by mask (entry 0 unused).
// Used for fixtures and for replaying saved ground-truth tables.
class TableGain final : public GainModel {
 public:
  TableGain(std::size_t width, std::vector<double> values_by_mask);

  std::size_t source_count() const override { return width_; }
  double gain(const SourceSet& subset) const override;
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t width_;
  std::vector<double> values_;
};

class FunctionGain final : public GainModel {
 public:
  FunctionGain(std::size_t width, std::function<double(const SourceSet&)> fn)
      : width_(width), fn_(std::move(fn)) {}

  std::size_t source_count() const override { return width_; }
  double gain(const SourceSet& subset) const override { return fn_(subset); }

 private:
  std::size_t width_;
  std::function<double(const SourceSet&)> fn_;
};

// Trains the task's model on the subset's training rows and scores it on
// the pooled test set.
class TrainedModelGain final : public GainModel {
 public:
  TrainedModelGain(std::shared_ptr<const SplitDataset> data, TaskSpec task);

  std::size_t source_count() const override { return data_->source_count(); }
  double gain(const SourceSet& subset) const override;

  const SplitDataset& data() const { return *data_; }
  const TaskSpec& task() const { return task_; }
  // Evaluations whose TPR gap was undefined and scored as -1.
  std::size_t undefined_tpr_count() const { return undefined_tpr_.load(); }

 private:
  std::shared_ptr<const SplitDataset> data_;
  TaskSpec task_;
  double baseline_mse_ = 0.0;
  bool tpr_undefined_ = false;
  mutable std::atomic<std::size_t> undefined_tpr_{0};
};

}  // namespace srcsel
