#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace srcsel {

enum class TaskKind { Classification, Fairness, Regression };
enum class TrainerKind { Logistic, Linear };

std::string_view to_string(TaskKind kind);
std::string_view to_string(TrainerKind kind);
// Throws ConfigError for unknown names.
TaskKind parse_task_kind(std::string_view name);

struct TrainerConfig {
  TrainerKind kind = TrainerKind::Logistic;
  int max_iterations = 500;
  double step_size = 0.1;
  double gradient_tolerance = 1e-6;
  double ridge = 1e-4;
  bool standardize = true;

  static TrainerConfig logistic_defaults() { return TrainerConfig{}; }
  static TrainerConfig linear_defaults() {
    TrainerConfig cfg;
    cfg.kind = TrainerKind::Linear;
    cfg.ridge = 1e-8;
    return cfg;
  }
};

struct TaskSpec {
  TaskKind kind = TaskKind::Classification;
  std::string label_column = "label";
  std::optional<std::string> sensitive_column;
  double lambda = 10.0;
  double test_fraction = 0.2;
  TrainerConfig trainer = TrainerConfig::logistic_defaults();
  std::uint64_t seed = 0;

  // Throws ConfigError on inconsistent combinations.
  void validate() const;
};

}  // namespace srcsel
