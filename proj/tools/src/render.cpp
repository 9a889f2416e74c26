#include "render.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace nsg::cli {

namespace {

bool is_rational(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }
bool is_surd(const Json& j) { return j.is_object() && j.contains("p") && j.contains("d") && j.contains("sign"); }

std::string cell(const Json& j, std::string_view key = {});

std::string scalar_list(const Json& arr, std::string_view key) {
  std::string s = "[";
  std::size_t shown = arr.size();
  if (key == "gaps" && shown > kGapDisplayLimit) shown = kGapDisplayLimit;
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) s += ", ";
    s += cell(arr[i]);
  }
  if (shown < arr.size()) s += ", ... (" + std::to_string(arr.size() - shown) + " more)";
  return s + "]";
}

std::string cell(const Json& j, std::string_view key) {
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_number_integer()) return std::to_string(j.get<Int>());
  if (j.is_string()) return j.get<std::string>();
  if (is_rational(j)) {
    const Int den = j["den"].get<Int>();
    return std::to_string(j["num"].get<Int>()) + (den == 1 ? "" : "/" + std::to_string(den));
  }
  if (is_surd(j))
    return "(" + std::to_string(j["p"].get<Int>()) + " " + j["sign"].get<std::string>() + " √" +
           std::to_string(j["d"].get<Int>()) + ")/" + std::to_string(j["q"].get<Int>()) + " ≈ " +
           j["approx"].get<std::string>();
  if (j.is_array()) return scalar_list(j, key);
  std::string s;
  for (const auto& [k, v] : j.items()) {
    if (!s.empty()) s += " ";
    s += k + "=" + cell(v, k);
  }
  return s;
}

bool is_record_list(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& x) {
           return x.is_object() && !is_rational(x) && !is_surd(x);
         });
}

// Display width counting UTF-8 code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void pad(std::ostream& out, const std::string& s, std::size_t w) {
  out << s << std::string(w > width(s) ? w - width(s) : 0, ' ');
}

void render_records(const Json& rows, std::ostream& out, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  for (const auto& c : columns) widths.push_back(width(c));
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      line.push_back(row.contains(columns[i]) ? cell(row[columns[i]], columns[i]) : "");
      widths[i] = std::max(widths[i], width(line.back()));
    }
    cells.push_back(std::move(line));
  }

  out << indent;
  for (std::size_t i = 0; i < columns.size(); ++i)
    i + 1 < columns.size() ? pad(out, columns[i], widths[i] + 2) : void(out << columns[i]);
  out << "\n";
  for (const auto& line : cells) {
    out << indent;
    for (std::size_t i = 0; i < line.size(); ++i)
      i + 1 < line.size() ? pad(out, line[i], widths[i] + 2) : void(out << line[i]);
    out << "\n";
  }
}

void render_object(const Json& obj, std::ostream& out, const std::string& indent) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : obj.items()) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : obj.items()) {
    if (is_record_list(v)) {
      out << indent << k << ":\n";
      const bool nested = std::any_of(v.begin(), v.end(), [](const Json& row) {
        return std::any_of(row.begin(), row.end(), [](const Json& x) { return is_record_list(x); });
      });
      if (!nested) {
        render_records(v, out, indent + "  ");
        continue;
      }
      for (const auto& row : v) {
        out << indent << "  -\n";
        render_object(row, out, indent + "    ");
      }
    } else if (v.is_object() && !is_rational(v) && !is_surd(v)) {
      out << indent << k << ":\n";
      render_object(v, out, indent + "  ");
    } else {
      out << indent;
      pad(out, k + ":", key_width + 2);
      out << cell(v, k) << "\n";
    }
  }
}

}  // namespace

void render_table(const Json& doc, std::ostream& out) {
  out << doc["command"].get<std::string>();
  if (!doc["inputs"].empty()) out << "  " << cell(doc["inputs"]);
  out << "\n";
  render_object(doc["results"], out, "  ");
}

}  // namespace nsg::cli
