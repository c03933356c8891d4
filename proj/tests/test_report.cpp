#include <doctest.h>

#include "hilb3/report.hpp"

using namespace hilb3;

TEST_CASE("catalog json") {
  const report::Json j = report::catalog();
  CHECK(j["schema"] == "1");
  CHECK(j["fixed_points"].size() == 21);
  CHECK(j["curves"].size() == 15);
  CHECK(j["fixed_points"][1]["c1_E0"] == "3z");
}

TEST_CASE("graphs json") {
  const report::Json empty = report::graphs(GraphFamily::T(0, 1, 2), 1);
  CHECK(empty["graphs"].empty());
  const report::Json one = report::graphs(GraphFamily::S(0, 1), 1);
  REQUIRE(one["graphs"].size() == 1);
  CHECK(one["graphs"][0]["automorphism_order"] == 1);
  CHECK(one["graphs"][0]["edges"][0]["curve"] == "C(0,1)");
}

TEST_CASE("invariant json is deterministic and uses strings") {
  const report::Json a = report::invariant(pair_ab(2, 0, 3));
  const report::Json b = report::invariant(pair_ab(2, 0, 3));
  CHECK(a.dump() == b.dump());
  CHECK(a["ab"] == "81/2");
  CHECK(a["invariant"] == "27/2");
  CHECK(a["verified_constant"] == true);
  CHECK(a["specializations"].size() == 3);
  CHECK(a["specializations"][0]["w"].is_string());
}

TEST_CASE("graphsum compares with closed forms") {
  const report::GraphSumRun run = report::run_graphsum(GraphFamily::T(2, 1, 2), 3, 0, 3, 1);
  CHECK(run.closed_forms_agree);
  CHECK(run.points.size() == 3);
  const report::GraphSumRun big = report::run_graphsum(GraphFamily::S(0, 2), 5, 0, 1, 1);
  CHECK_FALSE(big.points[0].closed_form.has_value());
}

TEST_CASE("tables") {
  const report::TableRun run = report::run_tables(2, 0, 3, 1);
  CHECK(run.f == std::vector<Rational>{-27, 27});
  const report::Json j = report::tables(run);
  CHECK(j["degrees"][0]["three_point"].size() == 4);
  CHECK(j["degrees"][1]["two_point"].size() == 3);
  CHECK(j["degrees"][1]["wdvv"]["holds"] == true);
  const std::string md = report::tables_markdown(run);
  CHECK(md.find("| 1 | -27 | 12 | 12 | -27 |") != std::string::npos);
  CHECK(md.find("| 1 | -24 | 54 | 54 | 243 | holds |") != std::string::npos);
}
