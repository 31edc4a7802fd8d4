#include <cstdlib>

#include "doctest.h"
#include "json.hpp"
#include "vpt/io.hpp"

using namespace vpt::io;

TEST_CASE("csv round trip") {
  std::vector<Record> recs;
  for (int i = 0; i < 3; ++i) {
    Record r;
    r.add("x", 1.0 / 3.0 + i);
    r.add("tiny", 1.2345678901234567e-17 * (i + 1));
    r.add("n", (long long)(42 + i));
    r.add("flag", i % 2 == 0);
    r.add("label", std::string(i == 1 ? "with,comma" : "plain"));
    recs.push_back(std::move(r));
  }
  const std::string text = to_csv(recs);
  const auto table = parse_csv(text);
  REQUIRE(table.header.size() == 5);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[1][4] == "with,comma");
  for (int i = 0; i < 3; ++i) {
    CHECK(std::strtod(table.rows[i][0].c_str(), nullptr) ==
          std::get<double>(recs[i].fields[0].second));
    CHECK(std::strtod(table.rows[i][1].c_str(), nullptr) ==
          std::get<double>(recs[i].fields[1].second));
  }
  // emitting the parsed table again reproduces the text
  std::vector<Record> reparsed;
  for (const auto& row : table.rows) {
    Record r;
    for (size_t c = 0; c < row.size(); ++c) r.add(table.header[c], row[c]);
    reparsed.push_back(std::move(r));
  }
  CHECK(to_csv(reparsed) == text);
}

TEST_CASE("json output carries the schema") {
  Record r;
  r.add("value", 0.5);
  const std::string text = to_json({{"command", std::string("test")}}, {r});
  auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == kSchema);
  CHECK(j["config"]["command"] == "test");
  CHECK(j["records"][0]["value"] == 0.5);
}
