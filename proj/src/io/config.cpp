#include "srcsel/io/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"

namespace srcsel {

std::string_view to_string(InputMode mode) {
  switch (mode) {
    case InputMode::SourcesDir: return "sources_dir";
    case InputMode::SingleCsv: return "single_csv";
    case InputMode::ProfitTable: return "profit_table";
  }
  return "?";
}

namespace {

InputMode parse_mode(std::string_view v) {
  if (v == "sources_dir") return InputMode::SourcesDir;
  if (v == "single_csv") return InputMode::SingleCsv;
  if (v == "profit_table") return InputMode::ProfitTable;
  throw Error(ErrorCode::ConfigError, "unknown mode '" + std::string(v) + "'");
}

bool parse_bool(std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(ErrorCode::ConfigError, "expected a boolean, got '" + std::string(v) + "'");
}

std::size_t parse_count(std::string_view v) {
  const long long n = parse_integer(v);
  if (n < 0) throw Error(ErrorCode::ConfigError, "expected a nonnegative integer");
  return static_cast<std::size_t>(n);
}

std::vector<std::string> parse_list(std::string_view v) {
  std::vector<std::string> out;
  if (trim(v).empty()) return out;
  for (const auto& item : split(v, ',')) out.emplace_back(trim(item));
  return out;
}

struct KeyInfo {
  std::string key;
  std::string default_value;
  std::string help;
  std::function<void(RunConfig&, std::string_view, const std::filesystem::path&)> apply;
};

const std::vector<KeyInfo>& key_table() {
  using P = const std::filesystem::path&;
  static const std::vector<KeyInfo> table = {
      {"mode", "sources_dir", "sources_dir | single_csv | profit_table",
       [](RunConfig& c, std::string_view v, P) { c.mode = parse_mode(v); }},
      {"input", "", "source directory, CSV file or ground-truth table (relative to the config)",
       [](RunConfig& c, std::string_view v, P base) {
         std::filesystem::path p(v);
         c.input = p.is_relative() ? base / p : p;
       }},
      {"partition_column", "", "column splitting a single CSV into sources",
       [](RunConfig& c, std::string_view v, P) { c.partition_column = std::string(v); }},
      {"feature_columns", "(all others)", "comma-separated feature columns",
       [](RunConfig& c, std::string_view v, P) { c.feature_columns = parse_list(v); }},
      {"categorical_columns", "", "feature columns to one-hot encode",
       [](RunConfig& c, std::string_view v, P) { c.categorical_columns = parse_list(v); }},
      {"label_column", "label", "label column",
       [](RunConfig& c, std::string_view v, P) { c.task.label_column = std::string(v); }},
      {"sensitive_column", "", "binary sensitive attribute (fairness task)",
       [](RunConfig& c, std::string_view v, P) { c.task.sensitive_column = std::string(v); }},
      {"source_names", "s0,s1,...", "names of profit-table sources in id order",
       [](RunConfig& c, std::string_view v, P) { c.source_names = parse_list(v); }},
      {"task", "classification", "classification | fairness | regression",
       [](RunConfig& c, std::string_view v, P) {
         c.task.kind = parse_task_kind(v);
         const auto kind = c.task.kind == TaskKind::Regression ? TrainerKind::Linear
                                                               : TrainerKind::Logistic;
         if (c.task.trainer.kind != kind) {
           c.task.trainer = kind == TrainerKind::Linear ? TrainerConfig::linear_defaults()
                                                        : TrainerConfig::logistic_defaults();
         }
       }},
      {"lambda", "10", "weight of the TPR gap in the fairness gain",
       [](RunConfig& c, std::string_view v, P) { c.task.lambda = parse_real(v); }},
      {"test_fraction", "0.2", "share of each source held out for the pooled test set",
       [](RunConfig& c, std::string_view v, P) { c.task.test_fraction = parse_real(v); }},
      {"split_seed", "0", "seed of the train/test split",
       [](RunConfig& c, std::string_view v, P) {
         c.task.seed = static_cast<std::uint64_t>(parse_integer(v));
       }},
      {"trainer.iterations", "500", "logistic gradient-descent iterations",
       [](RunConfig& c, std::string_view v, P) {
         c.task.trainer.max_iterations = static_cast<int>(parse_integer(v));
       }},
      {"trainer.step_size", "0.1", "logistic step size",
       [](RunConfig& c, std::string_view v, P) { c.task.trainer.step_size = parse_real(v); }},
      {"trainer.tolerance", "1e-6", "logistic gradient-norm stopping tolerance",
       [](RunConfig& c, std::string_view v, P) {
         c.task.trainer.gradient_tolerance = parse_real(v);
       }},
      {"trainer.ridge", "1e-4 (logistic) / 1e-8 (linear)", "L2 penalty",
       [](RunConfig& c, std::string_view v, P) { c.task.trainer.ridge = parse_real(v); }},
      {"trainer.standardize", "true", "standardize features on the training rows",
       [](RunConfig& c, std::string_view v, P) { c.task.trainer.standardize = parse_bool(v); }},
      {"cost.t", "1", "cost polynomial degree (0, 1 or 2)",
       [](RunConfig& c, std::string_view v, P) {
         c.costs.t = static_cast<int>(parse_integer(v));
       }},
      {"cost.a", "1", "cost slope on the individual gain",
       [](RunConfig& c, std::string_view v, P) { c.costs.a = parse_real(v); }},
      {"cost.b", "-70", "cost offset",
       [](RunConfig& c, std::string_view v, P) { c.costs.b = parse_real(v); }},
      {"cost.c", "0.01", "cost scale",
       [](RunConfig& c, std::string_view v, P) { c.costs.c = parse_real(v); }},
      {"cost.zero", "false", "disable acquisition cost",
       [](RunConfig& c, std::string_view v, P) { c.costs.zero_cost = parse_bool(v); }},
      {"algorithm", "splice", "naive | greedy | random | grasp | splice | datamodel",
       [](RunConfig& c, std::string_view v, P) { c.algorithm.algorithm = parse_algorithm(v); }},
      {"seeds", "0,1,...,9", "seeds of the stochastic algorithms",
       [](RunConfig& c, std::string_view v, P) { c.seeds = parse_seed_list(v); }},
      {"grasp.iterations", "20", "GRASP passes N",
       [](RunConfig& c, std::string_view v, P) { c.algorithm.grasp.iterations = parse_count(v); }},
      {"grasp.rcl_size", "5", "GRASP restricted candidate list size k",
       [](RunConfig& c, std::string_view v, P) { c.algorithm.grasp.rcl_size = parse_count(v); }},
      {"splice.s_max", "m", "largest seed subset size (0 = m)",
       [](RunConfig& c, std::string_view v, P) { c.algorithm.splice.s_max = parse_count(v); }},
      {"splice.k_max", "7", "largest swap size",
       [](RunConfig& c, std::string_view v, P) { c.algorithm.splice.k_max = parse_count(v); }},
      {"splice.add_valuation", "against_active", "against_active | after_removal",
       [](RunConfig& c, std::string_view v, P) {
         if (v == "against_active") {
           c.algorithm.splice.valuation = AddValuation::AgainstActive;
         } else if (v == "after_removal") {
           c.algorithm.splice.valuation = AddValuation::AfterRemoval;
         } else {
           throw Error(ErrorCode::ConfigError, "unknown add valuation '" + std::string(v) + "'");
         }
       }},
      {"datamodel.samples", "min(2^m - 1, 1000)", "surrogate training subsets T",
       [](RunConfig& c, std::string_view v, P) {
         c.algorithm.datamodel_samples = parse_count(v);
       }},
      {"naive.max_evaluations", "unlimited", "refuse exhaustive search beyond this many subsets",
       [](RunConfig& c, std::string_view v, P) {
         c.algorithm.naive.max_evaluations = parse_count(v);
       }},
      {"ground_truth.cap", "20", "largest m enumerated for percentile metrics",
       [](RunConfig& c, std::string_view v, P) { c.ground_truth_cap = parse_count(v); }},
      {"ground_truth.force", "false", "enumerate beyond the cap",
       [](RunConfig& c, std::string_view v, P) { c.force_ground_truth = parse_bool(v); }},
      {"threads", "1", "worker threads for enumeration",
       [](RunConfig& c, std::string_view v, P) { c.threads = std::max<std::size_t>(1, parse_count(v)); }},
  };
  return table;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : parse_list(text)) {
    long long v = 0;
    try {
      v = parse_integer(item);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.what());
    }
    if (v < 0) throw Error(ErrorCode::ConfigError, "seeds must be nonnegative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, "empty seed list");
  return out;
}

void RunConfig::validate() const {
  if (input.empty()) throw Error(ErrorCode::ConfigError, "missing key 'input'");
  if (mode == InputMode::SourcesDir && partition_column) {
    throw Error(ErrorCode::ConfigError, "sources_dir mode does not take partition_column");
  }
  if (mode == InputMode::SingleCsv && !partition_column) {
    throw Error(ErrorCode::ConfigError, "single_csv mode requires partition_column");
  }
  if (mode != InputMode::ProfitTable) {
    task.validate();
    std::set<std::string> reserved = {task.label_column};
    if (task.sensitive_column) reserved.insert(*task.sensitive_column);
    if (partition_column) reserved.insert(*partition_column);
    if (reserved.size() != 1 + (task.sensitive_column ? 1u : 0u) + (partition_column ? 1u : 0u)) {
      throw Error(ErrorCode::ConfigError, "label, sensitive and partition columns must differ");
    }
    for (const auto& f : feature_columns) {
      if (reserved.count(f)) {
        throw Error(ErrorCode::ConfigError,
                    "feature column '" + f + "' is also the label, sensitive or partition column");
      }
    }
    for (const auto& f : categorical_columns) {
      if (reserved.count(f)) {
        throw Error(ErrorCode::ConfigError, "categorical column '" + f + "' is reserved");
      }
      if (!feature_columns.empty() &&
          std::find(feature_columns.begin(), feature_columns.end(), f) == feature_columns.end()) {
        throw Error(ErrorCode::ConfigError,
                    "categorical column '" + f + "' is not among feature_columns");
      }
    }
  }
  try {
    costs.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  std::map<std::string, const KeyInfo*> by_key;
  for (const auto& info : key_table()) by_key[info.key] = &info;
  std::set<std::string> seen;

  struct Line {
    std::size_t number;
    const KeyInfo* info;
    std::string value;
  };
  std::vector<Line> lines;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto where = "config line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, where + "expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const auto it = by_key.find(key);
    if (it == by_key.end()) throw Error(ErrorCode::ConfigError, where + "unknown key '" + key + "'");
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::ConfigError, where + "duplicate key '" + key + "'");
    }
    lines.push_back({line_no, it->second, std::string(trim(line.substr(eq + 1)))});
  }
  // `task` selects the trainer defaults that later trainer.* keys refine.
  std::stable_partition(lines.begin(), lines.end(),
                        [](const Line& l) { return l.info->key == "task"; });
  for (const auto& l : lines) {
    try {
      l.info->apply(cfg, l.value, base_dir);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, "config line " + std::to_string(l.number) + ": " +
                                              l.info->key + ": " + e.what());
    }
  }
  if (cfg.seeds.empty()) {
    for (std::uint64_t s = 0; s < 10; ++s) cfg.seeds.push_back(s);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

std::string config_keys_help() {
  std::size_t width = 0;
  for (const auto& info : key_table()) width = std::max(width, info.key.size());
  std::ostringstream out;
  for (const auto& info : key_table()) {
    out << "  " << info.key << std::string(width - info.key.size() + 2, ' ') << info.help;
    if (!info.default_value.empty()) out << " [default: " << info.default_value << "]";
    out << '\n';
  }
  return out.str();
}

}  // namespace srcsel
