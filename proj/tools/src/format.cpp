#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>
#include <vector>

#include "homspace/error.hpp"

namespace homspace::cli {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string scalar_text(const Json& j, int digits) {
  if (j.is_null()) return "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  if (j.is_number_float()) return number(j.get<double>(), digits);
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

// Table mode keeps short numeric arrays on one line; CSV flattens everything.
void flatten(const Json& j, const std::string& key, Rows& out, int digits, bool inline_arrays) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out, digits, inline_arrays);
    }
  } else if (j.is_array()) {
    if (inline_arrays && is_flat_array(j)) {
      std::string s = "[";
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i], digits);
      out.emplace_back(key, s + "]");
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], key + "[" + std::to_string(i) + "]", out, digits, inline_arrays);
    }
  } else {
    out.emplace_back(key, scalar_text(j, digits));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

const Json* rows_of(const Json& record) {
  if (!record.contains("result")) return nullptr;
  const Json& r = record["result"];
  if (!r.is_object() || !r.contains("rows") || !r["rows"].is_array()) return nullptr;
  return &r["rows"];
}

std::vector<std::string> row_columns(const Json& rows) {
  std::vector<std::string> cols;
  for (const Json& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

void write_json_impl(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad << Json(it.key()).dump() << ": ";
      write_json_impl(os, it.value(), indent, depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close_pad << "}";
  } else if (j.is_array()) {
    if (is_flat_array(j)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write_json_impl(os, j[i], indent, depth + 1);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_json_impl(os, j[i], indent, depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close_pad << "]";
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    os << (std::isfinite(v) ? number(v) : "null");
  } else {
    os << j.dump();
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InvalidArgument("unknown format '" + name + "'");
}

std::string number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void write_json(std::ostream& os, const Json& j, int indent) {
  write_json_impl(os, j, indent, 0);
  os << '\n';
}

void write_table(std::ostream& os, const Json& record) {
  Rows kv;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (it.key() == "result" && rows_of(record)) {
      Json rest = it.value();
      rest.erase("rows");
      flatten(rest, "result", kv, 10, true);
    } else {
      flatten(it.value(), it.key(), kv, 10, true);
    }
  }
  std::size_t width = 0;
  for (const auto& [k, v] : kv) width = std::max(width, k.size());
  for (const auto& [k, v] : kv) {
    if (v.empty()) continue;
    os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }

  const Json* rows = rows_of(record);
  if (!rows || rows->empty()) return;
  const std::vector<std::string> cols = row_columns(*rows);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> w(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) w[c] = cols[c].size();
  for (const Json& row : *rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? scalar_text(row[cols[c]], 10) : "");
      w[c] = std::max(w[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  os << '\n';
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(w[c] - line[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(cols);
  std::vector<std::string> rule;
  for (std::size_t c = 0; c < cols.size(); ++c) rule.emplace_back(w[c], '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
}

void write_csv(std::ostream& os, const Json& record) {
  if (const Json* rows = rows_of(record)) {
    const std::vector<std::string> cols = row_columns(*rows);
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_field(cols[c]);
    os << '\n';
    for (const Json& row : *rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        os << (c ? "," : "") << (row.contains(cols[c]) ? csv_field(scalar_text(row[cols[c]], 17)) : "");
      }
      os << '\n';
    }
    return;
  }
  Rows kv;
  flatten(record, "", kv, 17, false);
  os << "key,value\n";
  for (const auto& [k, v] : kv) os << csv_field(k) << ',' << csv_field(v) << '\n';
}

void write(std::ostream& os, const Json& record, Format f) {
  switch (f) {
    case Format::Json: write_json(os, record); break;
    case Format::Csv: write_csv(os, record); break;
    case Format::Table: write_table(os, record); break;
  }
}

}  // namespace homspace::cli
