#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qrcomp {

enum class OutputFormat { Text, Csv, Json };

struct Cell {
  std::string text;
  nlohmann::json value;  // typed value for structured output

  static Cell of(std::string s);
  static Cell number(double v, int decimals);
  static Cell integer(long long v);
};

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> footnotes;
};

std::string render_text(const Table& t);
std::string render_csv(const Table& t);
nlohmann::json table_json(const Table& t);
std::string render(const Table& t, OutputFormat format);
// Several tables in one document; JSON output becomes an array.
std::string render(const std::vector<Table>& tables, OutputFormat format);

}  // namespace qrcomp
