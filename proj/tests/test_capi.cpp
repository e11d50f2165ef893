#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "kummer/kummer.h"

namespace {

struct Surface {
  km_surface* s = nullptr;
  Surface(int64_t n, int64_t l) { REQUIRE(km_surface_create(n, l, &s) == KM_OK); }
  ~Surface() { km_surface_destroy(s); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  km_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(km_version()) == "1.0.0");
  CHECK(std::string(km_status_name(KM_OK)) == "OK");
  CHECK(std::string(km_status_name(KM_ERR_TRIVIAL_PELL)) == "TrivialPell");
}

TEST_CASE("surface lifecycle") {
  km_surface* s = nullptr;
  CHECK(km_surface_create(0, 3, &s) == KM_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(km_last_error()).size() > 0);
  CHECK(km_surface_create(1, 3, nullptr) == KM_ERR_INVALID_ARGUMENT);
  km_surface_destroy(nullptr);

  Surface ok(6, 3);
  CHECK(km_surface_n(ok.s) == 6);
  CHECK(km_surface_l(ok.s) == 3);
  int trivial = -1;
  CHECK(km_surface_is_trivial_pell(ok.s, &trivial) == KM_OK);
  CHECK(trivial == 0);
}

TEST_CASE("slopes and solutions") {
  Surface s(6, 3);
  char *x = nullptr, *y = nullptr, *q = nullptr;
  REQUIRE(km_surface_pell_solution(s.s, 2, &x, &y) == KM_OK);
  CHECK(take(x) == "12");
  CHECK(take(y) == "17");
  REQUIRE(km_surface_nef_slope(s.s, &q) == KM_OK);
  CHECK(take(q) == "4/3");
  REQUIRE(km_surface_movable_slope(s.s, &q) == KM_OK);
  CHECK(take(q) == "24/17");

  Surface t(3, 3);
  CHECK(km_surface_pell_solution(t.s, 1, &x, &y) == KM_ERR_TRIVIAL_PELL);
  REQUIRE(km_surface_movable_slope(t.s, &q) == KM_OK);
  CHECK(take(q) == "1/1");

  Surface g(1, 8);
  CHECK(km_surface_nef_slope(g.s, &q) == KM_ERR_UNSUPPORTED_NEF);
  REQUIRE(km_surface_movable_slope(g.s, &q) == KM_OK);
  CHECK(take(q) == "6/17");
}

TEST_CASE("documents") {
  Surface s(1, 3);
  km_document* doc = nullptr;
  REQUIRE(km_cone(s.s, KM_CONE_AUTO, KM_FORMAT_JSON, &doc) == KM_OK);
  std::string text = km_document_text(doc);
  CHECK(km_document_size(doc) == text.size());
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(km_document_passed(doc) == 1);
  km_document_destroy(doc);

  CHECK(km_cone(s.s, KM_CONE_AUTO, KM_FORMAT_CSV, &doc) ==
        KM_ERR_INVALID_ARGUMENT);
  REQUIRE(km_chambers(s.s, 1, KM_FORMAT_TEXT, &doc) == KM_OK);
  km_document_destroy(doc);
  REQUIRE(km_walls(s.s, 3, KM_FORMAT_CSV, &doc) == KM_OK);
  CHECK(std::string(km_document_text(doc)).find("2,12,7,4/7") !=
        std::string::npos);
  km_document_destroy(doc);
  REQUIRE(km_pell(s.s, 3, KM_FORMAT_TEXT, &doc) == KM_OK);
  km_document_destroy(doc);
  REQUIRE(km_table(1, 20, KM_FORMAT_CSV, &doc) == KM_OK);
  km_document_destroy(doc);
  CHECK(km_table(5, 1, KM_FORMAT_CSV, &doc) == KM_ERR_INVALID_ARGUMENT);

  Surface t(3, 3);
  CHECK(km_walls(t.s, 3, KM_FORMAT_TEXT, &doc) == KM_ERR_TRIVIAL_PELL);
}

TEST_CASE("verify") {
  int64_t ls[] = {3, 4};
  km_verify_options o{1, 8, ls, 2, 150, 2};
  km_document* doc = nullptr;
  REQUIRE(km_verify(&o, KM_FORMAT_JSON, &doc) == KM_OK);
  CHECK(km_document_passed(doc) == 1);
  km_document_destroy(doc);

  km_verify_options small{9, 9, ls, 1, 10, 1};
  REQUIRE(km_verify(&small, KM_FORMAT_TEXT, &doc) == KM_OK);
  CHECK(km_document_passed(doc) == 0);
  km_document_destroy(doc);

  CHECK(km_verify(nullptr, KM_FORMAT_TEXT, &doc) == KM_ERR_INVALID_ARGUMENT);
}
