#include "srcsel/oracle/task.hpp"

#include "srcsel/core/error.hpp"

namespace srcsel {

std::string_view to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::Classification: return "classification";
    case TaskKind::Fairness: return "fairness";
    case TaskKind::Regression: return "regression";
  }
  return "?";
}

std::string_view to_string(TrainerKind kind) {
  return kind == TrainerKind::Logistic ? "logistic" : "linear";
}

TaskKind parse_task_kind(std::string_view name) {
  if (name == "classification") return TaskKind::Classification;
  if (name == "fairness") return TaskKind::Fairness;
  if (name == "regression") return TaskKind::Regression;
  throw Error(ErrorCode::ConfigError, "unknown task '" + std::string(name) + "'");
}

void TaskSpec::validate() const {
  if (kind == TaskKind::Fairness && !sensitive_column) {
    throw Error(ErrorCode::ConfigError, "fairness task requires a sensitive column");
  }
  if (!(lambda >= 0.0 && lambda <= 100.0)) {
    throw Error(ErrorCode::ConfigError, "lambda must lie in [0, 100]");
  }
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::ConfigError, "test_fraction must lie in (0, 1)");
  }
  const bool wants_linear = kind == TaskKind::Regression;
  if (wants_linear != (trainer.kind == TrainerKind::Linear)) {
    throw Error(ErrorCode::ConfigError, "regression pairs with the linear trainer, "
                                        "classification and fairness with logistic");
  }
  if (trainer.step_size <= 0.0 || trainer.gradient_tolerance <= 0.0 || trainer.ridge < 0.0 ||
      trainer.max_iterations < 0) {
    throw Error(ErrorCode::ConfigError, "invalid trainer hyperparameters");
  }
}

}  // namespace srcsel
