#pragma once

// Flat records rendered as json-lines, csv or a fixed-width table.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace triple_lattice::cli {

enum class OutputFormat { json_lines, csv, table };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "json-lines") return OutputFormat::json_lines;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  return std::nullopt;
}

using Value = std::variant<std::monostate, std::uint64_t, bool, std::string, std::vector<std::string>>;
using Record = std::vector<std::pair<std::string, Value>>;

template <class T>
Value maybe(const std::optional<T>& v) {
  if (!v) return std::monostate{};
  return *v;
}

/// Writes records that all share the field list given at construction.
/// csv and table emit their header immediately, so an empty stream still
/// names its columns.
class RecordWriter {
 public:
  RecordWriter(OutputFormat format, std::ostream& out, std::vector<std::string> fields)
      : format_(format), out_(out), fields_(std::move(fields)) {
    if (format_ == OutputFormat::csv) {
      for (std::size_t i = 0; i < fields_.size(); ++i) out_ << (i ? "," : "") << csv_cell(fields_[i]);
      out_ << '\n';
    } else if (format_ == OutputFormat::table) {
      for (std::size_t i = 0; i < fields_.size(); ++i) pad(fields_[i], i);
      out_ << '\n';
    }
  }

  void write(const Record& rec) {
    switch (format_) {
      case OutputFormat::json_lines: {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [name, v] : rec) j[name] = to_json(v);
        out_ << j.dump() << '\n';
        break;
      }
      case OutputFormat::csv:
        for (std::size_t i = 0; i < rec.size(); ++i)
          out_ << (i ? "," : "") << csv_cell(render(rec[i].second, "true", "false", "", ";"));
        out_ << '\n';
        break;
      case OutputFormat::table:
        for (std::size_t i = 0; i < rec.size(); ++i) pad(render(rec[i].second, "yes", "no", "-", " "), i);
        out_ << '\n';
        break;
    }
  }

 private:
  static constexpr std::size_t min_width = 8;

  static nlohmann::ordered_json to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::ordered_json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::monostate>)
            return nullptr;
          else
            return x;
        },
        v);
  }

  static std::string render(const Value& v, const char* yes, const char* no, const char* null,
                            const char* list_sep) {
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            return null;
          } else if constexpr (std::is_same_v<T, bool>) {
            return x ? yes : no;
          } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            return std::to_string(x);
          } else if constexpr (std::is_same_v<T, std::string>) {
            return x;
          } else {
            std::string s;
            for (std::size_t i = 0; i < x.size(); ++i) s += (i ? list_sep : "") + x[i];
            return s;
          }
        },
        v);
  }

  static std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }

  // Columns are as wide as their header (at least min_width); longer
  // values push the row out rather than being truncated.
  void pad(const std::string& s, std::size_t column) {
    std::size_t width = min_width;
    if (column < fields_.size()) width = std::max(width, fields_[column].size());
    width = std::max(width, s.size());
    out_ << std::string(width - s.size() + 1, ' ') << s;
  }

  OutputFormat format_;
  std::ostream& out_;
  std::vector<std::string> fields_;
};

}  // namespace triple_lattice::cli
