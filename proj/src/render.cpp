#include "qrcomp/render.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace qrcomp {

Cell Cell::of(std::string s) {
  Cell c;
  c.value = s;
  c.text = std::move(s);
  return c;
}

Cell Cell::number(double v, int decimals) { return Cell{fmt::format("{:.{}f}", v, decimals), v}; }

Cell Cell::integer(long long v) { return Cell{std::to_string(v), v}; }

std::string render_text(const Table& t) {
  std::vector<std::size_t> width(t.headers.size(), 0);
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].text.size());
    }
  }
  auto line = [&](auto cell_text) {
    std::string out;
    for (std::size_t i = 0; i < width.size(); ++i) {
      std::string cell = cell_text(i);
      if (i + 1 < width.size()) {
        out += fmt::format("{:<{}}  ", cell, width[i]);
      } else {
        out += cell;
      }
    }
    out.erase(out.find_last_not_of(' ') + 1);
    out += "\n";
    return out;
  };

  std::string out;
  if (!t.title.empty()) out += t.title + "\n";
  out += line([&](std::size_t i) { return t.headers[i]; });
  out += line([&](std::size_t i) { return std::string(width[i], '-'); });
  for (const auto& row : t.rows) {
    out += line([&](std::size_t i) { return i < row.size() ? row[i].text : std::string(); });
  }
  if (t.rows.empty()) out += "(no rows)\n";
  for (const auto& note : t.footnotes) out += "* " + note + "\n";
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const Table& t) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ",";
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  emit(t.headers);
  for (const auto& row : t.rows) {
    std::vector<std::string> fields;
    for (const Cell& c : row) fields.push_back(c.text);
    emit(fields);
  }
  return out;
}

nlohmann::json table_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.headers.size(); ++i) {
      obj[t.headers[i]] = row[i].value;
    }
    rows.push_back(std::move(obj));
  }
  return nlohmann::json{{"title", t.title},
                        {"columns", t.headers},
                        {"rows", std::move(rows)},
                        {"notes", t.footnotes}};
}

std::string render(const Table& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return render_text(t);
    case OutputFormat::Csv: return render_csv(t);
    case OutputFormat::Json: return table_json(t).dump(2) + "\n";
  }
  return {};
}

std::string render(const std::vector<Table>& tables, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::json all = nlohmann::json::array();
    for (const Table& t : tables) all.push_back(table_json(t));
    return all.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) out += "\n";
    out += render(tables[i], format);
  }
  return out;
}

}  // namespace qrcomp
