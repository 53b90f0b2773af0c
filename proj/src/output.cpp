#include "kfactor/output.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>

#include <json.hpp>

namespace kfactor::output {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::int64_t round_half_away(double v) {
  return std::llround(v);  // llround rounds halfway cases away from zero
}

std::string current_utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

namespace {

void write_csv(std::ostream& os, const Metadata& meta, const Payload& payload) {
  os << "# tool: " << meta.tool << ' ' << meta.version << '\n';
  os << "# command: " << meta.command << '\n';
  if (meta.preset) os << "# preset: " << *meta.preset << '\n';
  if (meta.c) os << "# c: " << format_double(*meta.c) << '\n';
  os << "# generated: " << meta.generated << '\n';
  for (std::size_t i = 0; i < payload.columns.size(); ++i) {
    if (i) os << ',';
    os << payload.columns[i];
  }
  os << '\n';
  for (const auto& row : payload.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
              os << "NA";
            else if constexpr (std::is_same_v<T, double>)
              os << format_double(v);
            else
              os << v;
          },
          row[i]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Metadata& meta,
                const Payload& payload) {
  nlohmann::ordered_json doc;
  auto& md = doc["metadata"];
  md["tool"] = meta.tool;
  md["version"] = meta.version;
  md["command"] = meta.command;
  if (meta.preset) md["preset"] = *meta.preset;
  if (meta.c) md["c"] = *meta.c;
  md["generated"] = meta.generated;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : payload.rows) {
    nlohmann::ordered_json record;
    for (std::size_t i = 0; i < row.size() && i < payload.columns.size(); ++i) {
      const auto& column = payload.columns[i];
      std::visit(
          [&record, &column](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
              record[column] = nullptr;
            else
              record[column] = v;
          },
          row[i]);
    }
    rows.push_back(std::move(record));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace

void write(std::ostream& os, const Metadata& meta, const Payload& payload,
           Format format) {
  if (format == Format::kCsv)
    write_csv(os, meta, payload);
  else
    write_json(os, meta, payload);
}

}  // namespace kfactor::output
