#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srcsel {

// Comma-separated text with a header row. Quoted fields may contain commas,
// doubled quotes and newlines. Every row has exactly header.size() cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

// Throws SchemaMismatch for ragged rows or a missing header, IoError when
// the file cannot be read. `origin` names the input in error messages.
CsvTable parse_csv(std::string_view text, const std::string& origin = "<memory>");
CsvTable read_csv(const std::filesystem::path& path);

// Quotes a cell when it contains a comma, quote or line break.
std::string csv_escape(std::string_view cell);
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace srcsel
