#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace kfactor::output {

enum class Format { kCsv, kJson };

/// One table cell. Monostate renders as "NA" (CSV) or null (JSON).
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double,
                          std::string>;

struct Metadata {
  std::string tool = "kfactor";
  std::string version;
  std::string command;
  std::optional<std::string> preset;
  std::optional<double> c;
  std::string generated;  // ISO-8601 UTC; excluded from determinism checks
};

struct Payload {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Full-precision decimal form of a double (round-trippable).
std::string format_double(double v);

/// Nearest-integer presentation, halves away from zero.
std::int64_t round_half_away(double v);

std::string current_utc_timestamp();

/// CSV: '#'-prefixed metadata comment lines, a header row, data rows.
/// JSON: {"metadata": {...}, "rows": [{column: value, ...}, ...]}.
void write(std::ostream& os, const Metadata& meta, const Payload& payload,
           Format format);

}  // namespace kfactor::output
