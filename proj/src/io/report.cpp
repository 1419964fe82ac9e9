#include "srcsel/io/report.hpp"

#include <fstream>
#include <sstream>

#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"
#include "srcsel/io/csv.hpp"

namespace srcsel {

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "version", "m", "algorithm", "seed", "subset_mask_hex", "gain", "cost", "profit",
      "percentile", "models_explored", "models_explored_pct", "delta_profit", "wall_time_ms"};
  return cols;
}

namespace {

std::string opt_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

std::vector<std::string> cells(const ReportRecord& r, std::size_t m) {
  return {std::to_string(kReportVersion),
          std::to_string(m),
          r.algorithm,
          r.seed ? std::to_string(*r.seed) : "",
          r.subset.to_hex(),
          format_real(r.breakdown.gain),
          format_real(r.breakdown.cost),
          format_real(r.breakdown.profit),
          opt_real(r.percentile),
          std::to_string(r.models_explored),
          format_real(r.models_explored_pct),
          opt_real(r.delta_profit),
          format_real(r.wall_time_ms)};
}

std::optional<double> read_opt_real(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return parse_real(cell);
}

}  // namespace

void write_report(std::ostream& out, const ReportFile& report) {
  out << csv_line(report_columns()) << '\n';
  for (const auto& r : report.records) {
    if (r.subset.width() != report.m) {
      throw Error(ErrorCode::InvalidArgument, "record width differs from the report's m");
    }
    out << csv_line(cells(r, report.m)) << '\n';
  }
}

ReportFile read_report(std::istream& in, const std::string& origin) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const CsvTable table = parse_csv(buf.str(), origin);
  if (table.header != report_columns()) {
    throw Error(ErrorCode::SchemaMismatch, origin + ": unexpected report columns");
  }
  ReportFile report;
  bool have_m = false;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const auto where = origin + ": record " + std::to_string(i + 1) + ": ";
    try {
      if (parse_integer(row[0]) != kReportVersion) {
        throw Error(ErrorCode::SchemaMismatch, where + "report version " + row[0] +
                                                   ", expected " +
                                                   std::to_string(kReportVersion));
      }
      const auto m = static_cast<std::size_t>(parse_integer(row[1]));
      if (have_m && m != report.m) throw Error(ErrorCode::SchemaMismatch, where + "mixed m");
      report.m = m;
      have_m = true;
      ReportRecord r;
      r.algorithm = row[2];
      if (!row[3].empty()) r.seed = static_cast<std::uint64_t>(parse_integer(row[3]));
      r.subset = SourceSet::from_hex(m, row[4]);
      r.breakdown = {parse_real(row[5]), parse_real(row[6]), parse_real(row[7])};
      r.percentile = read_opt_real(row[8]);
      r.models_explored = static_cast<std::size_t>(parse_integer(row[9]));
      r.models_explored_pct = parse_real(row[10]);
      r.delta_profit = read_opt_real(row[11]);
      r.wall_time_ms = parse_real(row[12]);
      report.records.push_back(std::move(r));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SchemaMismatch) throw;
      throw Error(ErrorCode::SchemaMismatch, where + e.what());
    }
  }
  return report;
}

void save_report(const std::filesystem::path& path, const ReportFile& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_report(out, report);
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

ReportFile load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_report(in, path.string());
}

std::string record_key(const ReportRecord& record, std::size_t m) {
  auto c = cells(record, m);
  c.pop_back();
  return csv_line(c);
}

}  // namespace srcsel
