#include "diamond/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>

using namespace diamond;

TEST_CASE("format_double round-trips exactly") {
  for (double v : {1.0 / 3.0, 0.1, 1e-300, 123456789.123456789, -2.5e17, 0.0,
                   2.0, -1.25, 6.02214076e23}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1.5) == "1.5");
}

TEST_CASE("csv layout is stable") {
  Table t;
  t.comments = {"first note", "second note"};
  t.columns = {"a", "b"};
  t.rows = {{1.5, 2.0}, {-0.25, 1e-3}};

  std::ostringstream os;
  write_csv(os, t);
  CHECK(os.str() == "# first note\n"
                    "# second note\n"
                    "a,b\n"
                    "1.5,2\n"
                    "-0.25,0.001\n");
}

TEST_CASE("csv rejects ragged rows") {
  Table t;
  t.columns = {"a", "b"};
  t.rows = {{1.0}};
  std::ostringstream os;
  CHECK_THROWS_AS(write_csv(os, t), std::invalid_argument);
}

TEST_CASE("jsonl meta line and rows parse back") {
  Table t;
  t.comments = {"a note"};
  t.columns = {"x", "N1"};
  t.rows = {{0.5, 0.125}, {1.0, 0.75}};

  std::ostringstream os;
  write_jsonl(os, t);

  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  const auto meta = nlohmann::json::parse(line);
  CHECK(meta.contains("version"));
  CHECK(meta["columns"].size() == 2);
  CHECK(meta["columns"][0] == "x");

  int rows = 0;
  while (std::getline(is, line)) {
    const auto row = nlohmann::json::parse(line);
    CHECK(row.contains("x"));
    CHECK(row.contains("N1"));
    ++rows;
  }
  CHECK(rows == 2);
}
