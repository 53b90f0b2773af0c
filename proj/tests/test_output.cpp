#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "kfactor/output.hpp"

using namespace kfactor::output;

namespace {

Payload sample_payload() {
  Payload p;
  p.columns = {"k", "value", "count", "label"};
  p.rows.push_back({Cell{std::int64_t{1}}, Cell{0.1 + 0.2},
                    Cell{std::uint64_t{664579}}, Cell{std::string("row")}});
  p.rows.push_back({Cell{std::int64_t{2}}, Cell{std::monostate{}},
                    Cell{std::uint64_t{0}}, Cell{std::string()}});
  return p;
}

Metadata sample_metadata() {
  Metadata m;
  m.version = "0.1.0";
  m.command = "table --x 10";
  m.preset = "exp-gamma";
  m.c = 41.25;
  m.generated = "2020-01-01T00:00:00Z";
  return m;
}

}  // namespace

TEST_CASE("rounding is half away from zero") {
  CHECK(round_half_away(2.5) == 3);
  CHECK(round_half_away(-2.5) == -3);
  CHECK(round_half_away(2.4999) == 2);
  CHECK(round_half_away(0.5) == 1);
  CHECK(round_half_away(-0.5) == -1);
  CHECK(round_half_away(620420.688) == 620421);
}

TEST_CASE("format_double round-trips") {
  for (const double v : {0.1 + 0.2, 1.0 / 3.0, 664579.0, 1e-17, -2.5}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("csv envelope layout") {
  std::ostringstream os;
  write(os, sample_metadata(), sample_payload(), Format::kCsv);
  const std::string expected =
      "# tool: kfactor 0.1.0\n"
      "# command: table --x 10\n"
      "# preset: exp-gamma\n"
      "# c: 41.25\n"
      "# generated: 2020-01-01T00:00:00Z\n"
      "k,value,count,label\n"
      "1,0.30000000000000004,664579,row\n"
      "2,NA,0,\n";
  CHECK(os.str() == expected);
}

TEST_CASE("json envelope parses back and matches csv values") {
  std::ostringstream json_os;
  write(json_os, sample_metadata(), sample_payload(), Format::kJson);
  const auto doc = nlohmann::json::parse(json_os.str());
  CHECK(doc["metadata"]["tool"] == "kfactor");
  CHECK(doc["metadata"]["preset"] == "exp-gamma");
  CHECK(doc["metadata"]["generated"] == "2020-01-01T00:00:00Z");
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["k"] == 1);
  CHECK(doc["rows"][0]["value"].get<double>() == 0.1 + 0.2);
  CHECK(doc["rows"][0]["count"] == 664579);
  CHECK(doc["rows"][1]["value"].is_null());

  // CSV/JSON isomorphism: parse the CSV payload and compare every value.
  std::ostringstream csv_os;
  write(csv_os, sample_metadata(), sample_payload(), Format::kCsv);
  std::istringstream csv_in(csv_os.str());
  std::string line;
  std::vector<std::string> data_lines;
  while (std::getline(csv_in, line))
    if (!line.empty() && line[0] != '#') data_lines.push_back(line);
  REQUIRE(data_lines.size() == 3);  // header + 2 rows
  const auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(s);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  const auto header = split(data_lines[0]);
  for (std::size_t r = 0; r < 2; ++r) {
    const auto fields = split(data_lines[r + 1]);
    REQUIRE(fields.size() == header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto& jv = doc["rows"][r][header[i]];
      if (fields[i] == "NA") {
        CHECK(jv.is_null());
      } else if (jv.is_number_float()) {
        CHECK(std::strtod(fields[i].c_str(), nullptr) == jv.get<double>());
      } else if (jv.is_number_unsigned() || jv.is_number_integer()) {
        CHECK(std::strtoll(fields[i].c_str(), nullptr, 10) ==
              jv.get<std::int64_t>());
      } else {
        CHECK(fields[i] == jv.get<std::string>());
      }
    }
  }
}
