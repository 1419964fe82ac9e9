#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "srcsel/bench/runner.hpp"

namespace srcsel {

inline constexpr int kReportVersion = 1;

// CSV with one row per (algorithm, seed). Columns, in order:
//   version, m, algorithm, seed, subset_mask_hex, gain, cost, profit,
//   percentile, models_explored, models_explored_pct, delta_profit,
//   wall_time_ms
// Absent optionals are empty cells; reals carry 17 significant digits.
struct ReportFile {
  std::size_t m = 0;
  std::vector<ReportRecord> records;
};

const std::vector<std::string>& report_columns();

void write_report(std::ostream& out, const ReportFile& report);
// Throws SchemaMismatch on a different header, version or width.
ReportFile read_report(std::istream& in, const std::string& origin = "<stream>");

void save_report(const std::filesystem::path& path, const ReportFile& report);
ReportFile load_report(const std::filesystem::path& path);

// The row of one record without the wall-time cell.
std::string record_key(const ReportRecord& record, std::size_t m);

}  // namespace srcsel
