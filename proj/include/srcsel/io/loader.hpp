#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "srcsel/core/catalog.hpp"
#include "srcsel/io/config.hpp"
#include "srcsel/oracle/dataset.hpp"
#include "srcsel/oracle/oracle.hpp"

namespace srcsel {

struct LoadSummary {
  std::size_t rows_read = 0;
  // Rows with an empty or "NA" cell in a used column.
  std::size_t rows_dropped = 0;
  // Final feature order, one-hot columns named "column=value".
  std::vector<std::string> feature_names;
};

struct LoadedSources {
  SourceCatalog catalog;
  std::vector<RawSource> sources;
  LoadSummary summary;
};

// Reads the sources of a sources_dir or single_csv configuration. Throws
// MissingColumn, NonNumericFeature, EmptyPartition, DuplicateSourceName,
// EmptyInput or IoError.
LoadedSources load_sources(const RunConfig& cfg);

// Everything a selector needs: the catalog, the gain function and costs.
struct Problem {
  SourceCatalog catalog;
  std::shared_ptr<const GainModel> model;
  CostModel costs;
  LoadSummary summary;
};

// Data modes split the sources and train per subset. A profit table is
// replayed as the gain with costs disabled, since its values are profits.
Problem load_problem(const RunConfig& cfg);

}  // namespace srcsel
