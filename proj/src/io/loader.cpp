#include "srcsel/io/loader.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "srcsel/bench/ground_truth.hpp"
#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"
#include "srcsel/io/csv.hpp"
#include "srcsel/oracle/gain_models.hpp"

namespace srcsel {

namespace {

// Rows of one source before numeric conversion.
struct TextSource {
  std::string name;
  const CsvTable* table;
  std::vector<std::size_t> rows;
};

bool is_missing(std::string_view cell) {
  cell = trim(cell);
  return cell.empty() || cell == "NA";
}

std::size_t require_column(const CsvTable& t, const std::string& name, const std::string& origin) {
  const auto c = t.column(name);
  if (!c) throw Error(ErrorCode::MissingColumn, origin + " has no column '" + name + "'");
  return *c;
}

double numeric_cell(std::string_view cell, const std::string& column, const std::string& origin) {
  try {
    return parse_real(trim(cell));
  } catch (const Error&) {
    throw Error(ErrorCode::NonNumericFeature, origin + ": column '" + column +
                                                  "' holds non-numeric value '" +
                                                  std::string(cell) + "'");
  }
}

}  // namespace

LoadedSources load_sources(const RunConfig& cfg) {
  cfg.validate();
  std::vector<CsvTable> tables;
  std::vector<TextSource> text_sources;

  if (cfg.mode == InputMode::SourcesDir) {
    if (!std::filesystem::is_directory(cfg.input)) {
      throw Error(ErrorCode::IoError, cfg.input.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(cfg.input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".csv") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    if (files.empty()) {
      throw Error(ErrorCode::EmptyInput, "no .csv files in " + cfg.input.string());
    }
    tables.reserve(files.size());
    for (const auto& f : files) tables.push_back(read_csv(f));
    for (std::size_t i = 0; i < files.size(); ++i) {
      TextSource src{files[i].stem().string(), &tables[i], {}};
      for (std::size_t r = 0; r < tables[i].rows.size(); ++r) src.rows.push_back(r);
      text_sources.push_back(std::move(src));
    }
  } else if (cfg.mode == InputMode::SingleCsv) {
    tables.push_back(read_csv(cfg.input));
    const CsvTable& t = tables.front();
    const std::size_t pc = require_column(t, *cfg.partition_column, cfg.input.string());
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const std::string key(trim(t.rows[r][pc]));
      if (is_missing(key)) {
        throw Error(ErrorCode::EmptyPartition,
                    cfg.input.string() + ": data row " + std::to_string(r + 1) +
                        " has no partition value");
      }
      groups[key].push_back(r);
    }
    if (groups.empty()) throw Error(ErrorCode::EmptyInput, cfg.input.string() + " has no rows");
    for (auto& [name, rows] : groups) text_sources.push_back({name, &t, std::move(rows)});
  } else {
    throw Error(ErrorCode::ConfigError, "profit_table mode has no data sources to load");
  }

  // Feature columns default to every non-reserved column of the first table.
  std::set<std::string> reserved = {cfg.task.label_column};
  if (cfg.task.sensitive_column) reserved.insert(*cfg.task.sensitive_column);
  if (cfg.partition_column) reserved.insert(*cfg.partition_column);
  std::vector<std::string> features = cfg.feature_columns;
  if (features.empty()) {
    for (const auto& h : text_sources.front().table->header) {
      if (!reserved.count(h)) features.push_back(h);
    }
  }
  const std::set<std::string> categorical(cfg.categorical_columns.begin(),
                                          cfg.categorical_columns.end());
  for (const auto& c : categorical) {
    if (std::find(features.begin(), features.end(), c) == features.end()) {
      throw Error(ErrorCode::MissingColumn, "categorical column '" + c + "' is not a feature");
    }
  }

  LoadedSources out;
  // Column indices per source, and the rows that survive the missing-cell
  // filter.
  struct Layout {
    std::vector<std::size_t> feature_idx;
    std::size_t label_idx;
    std::optional<std::size_t> sensitive_idx;
  };
  std::vector<Layout> layouts;
  for (auto& src : text_sources) {
    const auto origin = cfg.mode == InputMode::SourcesDir ? src.name + ".csv" : cfg.input.string();
    Layout l;
    for (const auto& f : features) l.feature_idx.push_back(require_column(*src.table, f, origin));
    l.label_idx = require_column(*src.table, cfg.task.label_column, origin);
    if (cfg.task.sensitive_column) {
      l.sensitive_idx = require_column(*src.table, *cfg.task.sensitive_column, origin);
    }
    std::vector<std::size_t> kept;
    for (std::size_t r : src.rows) {
      const auto& row = src.table->rows[r];
      bool missing = is_missing(row[l.label_idx]) ||
                     (l.sensitive_idx && is_missing(row[*l.sensitive_idx]));
      for (std::size_t c : l.feature_idx) missing = missing || is_missing(row[c]);
      out.summary.rows_read += 1;
      if (missing) {
        out.summary.rows_dropped += 1;
      } else {
        kept.push_back(r);
      }
    }
    if (kept.empty()) {
      throw Error(ErrorCode::EmptyPartition, "source '" + src.name + "' has no complete rows");
    }
    src.rows = std::move(kept);
    layouts.push_back(std::move(l));
  }

  // Category levels are pooled over every source so all sources share one
  // column layout.
  std::map<std::string, std::vector<std::string>> levels;
  for (std::size_t j = 0; j < features.size(); ++j) {
    if (!categorical.count(features[j])) continue;
    std::set<std::string> values;
    for (std::size_t s = 0; s < text_sources.size(); ++s) {
      for (std::size_t r : text_sources[s].rows) {
        values.insert(std::string(trim(text_sources[s].table->rows[r][layouts[s].feature_idx[j]])));
      }
    }
    levels[features[j]] = std::vector<std::string>(values.begin(), values.end());
  }
  for (const auto& f : features) {
    if (categorical.count(f)) {
      for (const auto& v : levels[f]) out.summary.feature_names.push_back(f + "=" + v);
    } else {
      out.summary.feature_names.push_back(f);
    }
  }
  const auto width = static_cast<Eigen::Index>(out.summary.feature_names.size());

  std::vector<std::pair<std::string, std::size_t>> names;
  for (std::size_t s = 0; s < text_sources.size(); ++s) {
    const auto& src = text_sources[s];
    const auto& l = layouts[s];
    const auto origin = cfg.mode == InputMode::SourcesDir ? src.name + ".csv" : cfg.input.string();
    const auto n = static_cast<Eigen::Index>(src.rows.size());
    RawSource raw{src.name, {}};
    raw.data.features = Eigen::MatrixXd::Zero(n, width);
    raw.data.labels.resize(n);
    if (l.sensitive_idx) raw.data.sensitive = Eigen::VectorXd(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = src.table->rows[src.rows[static_cast<std::size_t>(i)]];
      Eigen::Index col = 0;
      for (std::size_t j = 0; j < features.size(); ++j) {
        const std::string_view cell = trim(row[l.feature_idx[j]]);
        if (categorical.count(features[j])) {
          const auto& lv = levels[features[j]];
          const auto pos = std::lower_bound(lv.begin(), lv.end(), cell) - lv.begin();
          raw.data.features(i, col + pos) = 1.0;
          col += static_cast<Eigen::Index>(lv.size());
        } else {
          raw.data.features(i, col++) = numeric_cell(cell, features[j], origin);
        }
      }
      raw.data.labels(i) = numeric_cell(row[l.label_idx], cfg.task.label_column, origin);
      if (l.sensitive_idx) {
        (*raw.data.sensitive)(i) =
            numeric_cell(row[*l.sensitive_idx], *cfg.task.sensitive_column, origin);
      }
    }
    names.emplace_back(src.name, src.rows.size());
    out.sources.push_back(std::move(raw));
  }
  out.catalog = SourceCatalog(std::move(names));
  return out;
}

Problem load_problem(const RunConfig& cfg) {
  Problem problem;
  if (cfg.mode == InputMode::ProfitTable) {
    cfg.validate();
    const GroundTruthTable table = GroundTruthTable::load(cfg.input);
    const std::size_t m = table.source_count();
    std::vector<std::pair<std::string, std::size_t>> names;
    if (!cfg.source_names.empty() && cfg.source_names.size() != m) {
      throw Error(ErrorCode::ConfigError, "source_names lists " +
                                              std::to_string(cfg.source_names.size()) +
                                              " names for a table of " + std::to_string(m) +
                                              " sources");
    }
    for (std::size_t i = 0; i < m; ++i) {
      names.emplace_back(cfg.source_names.empty() ? "s" + std::to_string(i) : cfg.source_names[i],
                         0);
    }
    problem.catalog = SourceCatalog(std::move(names));
    problem.model = std::make_shared<TableGain>(m, table.by_mask());
    problem.costs = CostModel::free();
    return problem;
  }
  LoadedSources loaded = load_sources(cfg);
  auto split = std::make_shared<const SplitDataset>(
      split_sources(loaded.sources, cfg.task.test_fraction, cfg.task.seed));
  problem.catalog = std::move(loaded.catalog);
  problem.model = std::make_shared<TrainedModelGain>(std::move(split), cfg.task);
  problem.costs = cfg.costs;
  problem.summary = std::move(loaded.summary);
  return problem;
}

}  // namespace srcsel
