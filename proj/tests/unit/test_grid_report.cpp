#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qcdist/grid.hpp"
#include "qcdist/parallel.hpp"
#include "qcdist/report_io.hpp"

using namespace qcdist;

TEST_CASE("grid parsing", "[grid]") {
  const GridSpec g = parse_grid("K", "1:17:33");
  const auto pts = g.points();
  REQUIRE(pts.size() == 33);
  CHECK(pts.front() == 1.0);
  CHECK(pts[1] == 1.5);
  CHECK(pts.back() == 17.0);

  const auto lg = parse_grid("r", "1e-4:1:5", Spacing::log).points();
  CHECK(lg[2] == Catch::Approx(1e-2).epsilon(1e-14));

  CHECK_THROWS_AS(parse_grid("K", "1:17"), usage_error);
  CHECK_THROWS_AS(parse_grid("K", "5:1:3"), usage_error);
  CHECK_THROWS_AS(parse_grid("K", "1:2:1"), usage_error);
  CHECK_THROWS_AS(parse_grid("K", "1:2:2.5"), usage_error);
  CHECK_THROWS_AS(parse_grid("K", "a:2:3"), usage_error);
  CHECK_THROWS_AS(parse_grid("r", "0:1:3", Spacing::log), usage_error);
  CHECK_THROWS_AS(parse_spacing("cubic"), usage_error);
}

TEST_CASE("check semantics", "[report]") {
  CHECK(*assert_check("x", {}, 1.0, 1.0 - 1e-13).pass);
  CHECK_FALSE(*assert_check("x", {}, 1.0, 1.0 - 1e-11).pass);
  CHECK_FALSE(*assert_check("x", {}, 1.0, 1.0, Relation::less).pass);
  CHECK(*assert_check("x", {}, 1.0, 1.0 + 1e-13, Relation::equal).pass);
  CHECK_FALSE(*assert_check("x", {}, std::nan(""), 1.0).pass);
  const CheckReport info = record_check("y", {}, 2.0, 1.0, "exploratory");
  CHECK_FALSE(info.asserted());
  CHECK_FALSE(info.failed());
  CHECK(std::string(status_of(info)) == "INFO");
  CHECK(std::string(status_of(not_applicable("z", {}, "n/a"))) == "N/A ");
  CHECK(count_failures({assert_check("a", {}, 2.0, 1.0), info}) == 1);
}

TEST_CASE("CSV round-trips binary64", "[report]") {
  const double v = 0.1 + 0.2;
  Table t{{"a", "b"}, {{v, std::numbers::pi}}};
  std::ostringstream os;
  t.write_csv(os);
  std::istringstream is(os.str());
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  CHECK(header == "a,b");
  CHECK(std::strtod(row.substr(0, row.find(',')).c_str(), nullptr) == v);
  CHECK(row == "0.30000000000000004,3.1415926535897931");
}

TEST_CASE("JSON lines", "[report]") {
  CheckReport c = assert_check("id", {{"K", 2.0}}, 1.0, std::numeric_limits<double>::infinity());
  const auto j = to_json(c);
  CHECK(j["check_id"] == "id");
  CHECK(j["rhs"].is_null());
  CHECK(j["pass"] == true);
  CHECK(j.dump().find('\n') == std::string::npos);
  Table t{{"k", "v"}, {{0.0, 1.0}, {1.0, std::nan("")}}};
  std::ostringstream os;
  t.write_json_lines(os);
  CHECK(os.str() == "{\"k\":0.0,\"v\":1.0}\n{\"k\":1.0,\"v\":null}\n");
}

TEST_CASE("parallel map keeps index order and propagates errors", "[parallel]") {
  const auto out = parallel_map(1000, [](std::size_t i) { return static_cast<double>(i * i); }, 4);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<double>(i * i));
  CHECK(parallel_map(0, [](std::size_t) { return 1; }, 3).empty());
  CHECK_THROWS_AS(parallel_map(
                      50,
                      [](std::size_t i) {
                        if (i == 17) throw std::runtime_error("boom");
                        return 0;
                      },
                      4),
                  std::runtime_error);
}
