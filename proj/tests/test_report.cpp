#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/cones.hpp"
#include "kummer/error.hpp"
#include "kummer/report.hpp"

using namespace kummer;
using nlohmann::json;

namespace {

json parse(const Document& d) { return json::parse(render(d, Format::Json)); }

}  // namespace

TEST_CASE("json envelope") {
  auto j = parse(cone_document(SurfaceParams(6, 3), ConeSelection::Auto));
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "cone");
  CHECK(j["params"]["n"] == "6");
  CHECK(j["params"]["l"] == "3");
  CHECK(j["payload"]["table_row"] == "X1even_Y1div3");
  CHECK(j["payload"]["nef_equals_movable"] == false);
  CHECK(j["payload"]["nef"]["slope"] == "4/3");
  CHECK(j["payload"]["movable"]["wall"]["u"] == json({"3", "2", "8"}));
}

TEST_CASE("exact values survive a json round trip") {
  for (long n : {1, 6, 9, 18, 61, 199}) {
    auto j = parse(cone_document(SurfaceParams(n, 3), ConeSelection::Both));
    auto mov = movable_boundary_km2(n);
    CHECK(parse_rational(j["payload"]["movable"]["slope"].get<std::string>()) ==
          mov.boundary_slope);
    auto u = j["payload"]["movable"]["wall"]["u"];
    CHECK(parse_integer(u[0].get<std::string>()) == mov.wall->u.r);
    CHECK(parse_integer(u[1].get<std::string>()) == mov.wall->u.c);
    CHECK(parse_integer(u[2].get<std::string>()) == mov.wall->u.a);
  }
}

TEST_CASE("rendering is deterministic") {
  auto a = render(walls_document(SurfaceParams(7, 3), 6), Format::Json);
  auto b = render(walls_document(SurfaceParams(7, 3), 6), Format::Json);
  CHECK(a == b);
  VerifyOptions o;
  o.n_first = 1;
  o.n_last = 12;
  o.l_values = {3, 4};
  o.bounds = {150};
  o.jobs = 1;
  auto s1 = render(verify_document(o), Format::Json);
  o.jobs = 4;
  CHECK(s1 == render(verify_document(o), Format::Json));
}

TEST_CASE("csv") {
  auto t = render(table_document(1, 3), Format::Csv);
  CHECK(t.rfind("n,table_row,X1,Y1,nef_slope,movable_slope,nef_equals_movable\n", 0) == 0);
  CHECK(t.find("1,NDivisibleCase_3ndivn,3,2,1/2,1/2,true\n") != std::string::npos);
  auto w = render(walls_document(SurfaceParams(1, 3), 2), Format::Csv);
  CHECK(w.find("1,3,2,1/2,1,1,1,2\n") != std::string::npos);
  CHECK_THROWS_AS(render(cone_document(SurfaceParams(1, 3), ConeSelection::Auto),
                         Format::Csv),
                  Error);
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(cone_document(SurfaceParams(1, 5), ConeSelection::Nef), Error);
  CHECK_NOTHROW(cone_document(SurfaceParams(1, 5), ConeSelection::Auto));
  CHECK_THROWS_AS(walls_document(SurfaceParams(3, 3), 3), Error);
  CHECK_THROWS_AS(chambers_document(SurfaceParams(1, 4), false), Error);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK_THROWS_AS(parse_cone_selection("ample"), Error);
  auto p = parse(pell_document(SurfaceParams(3, 3), 4));
  CHECK(p["payload"]["trivial"] == true);
  CHECK(p["payload"]["solutions"].size() == 1);
}

TEST_CASE("verify document") {
  VerifyOptions o;
  o.n_first = 1;
  o.n_last = 10;
  o.bounds = {300};
  auto d = verify_document(o);
  CHECK(d.passed);
  auto j = parse(d);
  CHECK(j["payload"]["verdict"] == "pass");
  CHECK(j["payload"]["summary"]["passed"] == "10");

  o.n_first = o.n_last = 9;
  o.bounds = {10};
  d = verify_document(o);
  CHECK_FALSE(d.passed);
  CHECK(parse(d)["payload"]["summary"]["incomplete"] == "1");
}
