#include <doctest.h>

#include <sstream>

#include "mmwprop/measurement_csv.hpp"

using namespace mmwprop;

TEST_CASE("reads the plain three-column format") {
  std::istringstream in("fc_ghz,d_m,pl_db\n28,100,103.34\n73,250.5,131.2\n");
  const auto records = read_measurement_csv(in);
  REQUIRE(records.size() == 2);
  CHECK(records[0].fc_ghz == 28.0);
  CHECK(records[0].d_m == 100.0);
  CHECK(records[0].pl_db == 103.34);
  CHECK(records[1].d_m == 250.5);
}

TEST_CASE("d_kind column converts 2d rows using the heights") {
  std::istringstream in("fc_ghz,d_m,pl_db,d_kind\n28,100,103.3,2d\n28,100,103.3,3d\n");
  const auto records = read_measurement_csv(in, 10.0, 1.5);
  REQUIRE(records.size() == 2);
  CHECK(records[0].d_m == doctest::Approx(100.360599839).epsilon(1e-10));
  CHECK(records[1].d_m == 100.0);
}

TEST_CASE("2d rows without heights are an error") {
  std::istringstream in("fc_ghz,d_m,pl_db,d_kind\n28,100,103.3,2d\n");
  CHECK_THROWS_AS(read_measurement_csv(in), CsvParseError);
  try {
    std::istringstream again("fc_ghz,d_m,pl_db,d_kind\n28,100,103.3,3d\n28,50,96.1,2d\n");
    read_measurement_csv(again);
    FAIL("expected a parse error");
  } catch (const CsvParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("malformed rows carry their line number") {
  try {
    std::istringstream in("fc_ghz,d_m,pl_db\n28,100,103.3\n28,oops,99\n");
    read_measurement_csv(in);
    FAIL("expected a parse error");
  } catch (const CsvParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("d_m") != std::string::npos);
  }
}

TEST_CASE("wrong header or field counts are errors") {
  std::istringstream bad_header("freq,dist,loss\n28,100,103.3\n");
  CHECK_THROWS_AS(read_measurement_csv(bad_header), CsvParseError);

  std::istringstream short_row("fc_ghz,d_m,pl_db\n28,100\n");
  CHECK_THROWS_AS(read_measurement_csv(short_row), CsvParseError);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_measurement_csv(empty), CsvParseError);

  std::istringstream bad_kind("fc_ghz,d_m,pl_db,d_kind\n28,100,103.3,sideways\n");
  CHECK_THROWS_AS(read_measurement_csv(bad_kind), CsvParseError);
}

TEST_CASE("whitespace around fields is tolerated, junk is not") {
  std::istringstream in("fc_ghz,d_m,pl_db\n 28 , 100 , 103.3 \n");
  const auto records = read_measurement_csv(in);
  CHECK(records.size() == 1);

  std::istringstream junk("fc_ghz,d_m,pl_db\n28,100,103.3junk\n");
  CHECK_THROWS_AS(read_measurement_csv(junk), CsvParseError);
}
