// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "fatpoints/fatpoints.h"

namespace {

const char* kFourLines = R"({"kind":"distinct","collinear":[[1,2,3],[1,4,5],[3,5,6],[2,4,6]],"six_on_conic":false})";

struct Config {
  fp_config* ptr = nullptr;
  ~Config() { fp_config_free(ptr); }
};

size_t list_size_and_free(fp_class_list* list) {
  const size_t n = fp_class_list_size(list);
  fp_class_list_free(list);
  return n;
}

}  // namespace

TEST_CASE("configuration handles") {
  Config c;
  REQUIRE(fp_config_from_json(kFourLines, &c.ptr) == FP_OK);
  CHECK(std::string(fp_config_type_name(c.ptr)) == "distinct");
  CHECK(fp_config_is_distinct(c.ptr) == 1);
  CHECK(fp_config_has_points(c.ptr) == 0);
  CHECK(fp_config_anticanonical_nef(c.ptr) == 1);

  fp_config* bad = nullptr;
  CHECK(fp_config_from_json(R"({"kind":"distinct","collinear":[[1,2,3],[1,2,4]]})", &bad) ==
        FP_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(fp_last_error()).find("share 2 points") != std::string::npos);
  CHECK(fp_config_from_json("{", &bad) != FP_OK);
  CHECK(fp_config_from_json(nullptr, &bad) == FP_ERR_NULL_ARGUMENT);
  CHECK(fp_config_from_file("/nonexistent/config.json", &bad) != FP_OK);
  CHECK(std::string(fp_status_name(FP_ERR_OVERFLOW)).size() > 0);
  fp_config_free(nullptr);
}

TEST_CASE("class lists") {
  Config c;
  REQUIRE(fp_config_from_json(kFourLines, &c.ptr) == FP_OK);
  fp_class_list* list = nullptr;
  REQUIRE(fp_neg(c.ptr, &list) == FP_OK);
  CHECK(list_size_and_free(list) == 13);
  REQUIRE(fp_nef_generators(c.ptr, 0, &list) == FP_OK);
  CHECK(list_size_and_free(list) == 39);
  REQUIRE(fp_nef_generators(c.ptr, 1, &list) == FP_OK);
  CHECK(list_size_and_free(list) == 212);

  const fp_coeff e0[FP_RANK] = {1, 0, 0, 0, 0, 0, 0};
  REQUIRE(fp_orbit(e0, &list) == FP_OK);
  CHECK(fp_class_list_size(list) == 72);
  fp_coeff out[FP_RANK];
  CHECK(fp_class_list_get(list, 0, out) == FP_OK);
  CHECK(fp_class_list_get(list, 72, out) == FP_ERR_INVALID_ARGUMENT);
  fp_class_list_free(list);

  Config four_a1;
  REQUIRE(fp_config_from_json(R"({"kind":"dynkin","type":"4A1"})", &four_a1.ptr) == FP_OK);
  REQUIRE(fp_e0_classes(four_a1.ptr, &list) == FP_OK);
  CHECK(list_size_and_free(list) == 17);
}

TEST_CASE("single classes") {
  fp_coeff f[FP_RANK];
  REQUIRE(fp_parse_class("8 -2 -2 -6 -2 -2 -2", f) == FP_OK);
  char buf[64];
  REQUIRE(fp_format_class(f, buf, sizeof buf) == FP_OK);
  fp_coeff back[FP_RANK];
  REQUIRE(fp_parse_class(buf, back) == FP_OK);
  CHECK(std::memcmp(f, back, sizeof f) == 0);
  char tiny[4];
  CHECK(fp_format_class(f, tiny, sizeof tiny) != FP_OK);
  CHECK(fp_parse_class("1 2", f) == FP_ERR_PARSE);

  Config c;
  REQUIRE(fp_config_from_json(kFourLines, &c.ptr) == FP_OK);
  REQUIRE(fp_parse_class("8 -2 -2 -6 -2 -2 -2", f) == FP_OK);
  fp_coeff h = -1;
  REQUIRE(fp_h0(c.ptr, f, &h) == FP_OK);
  CHECK(h == 11);
  int nef = -1;
  REQUIRE(fp_is_nef(c.ptr, f, &nef) == FP_OK);
  CHECK(nef == 0);
}

TEST_CASE("catalog") {
  CHECK(fp_catalog_size() == 20);
  CHECK(std::string(fp_catalog_name(0)) == "A1");
  CHECK(std::string(fp_catalog_name(19)) == "E6");
  CHECK(fp_catalog_name(20) == nullptr);
  fp_class_list* roots = nullptr;
  REQUIRE(fp_catalog_roots(19, &roots) == FP_OK);
  CHECK(list_size_and_free(roots) == 6);
  CHECK(fp_catalog_roots(20, &roots) == FP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("resolution") {
  Config c;
  REQUIRE(fp_config_from_json(kFourLines, &c.ptr) == FP_OK);
  const fp_coeff m[FP_POINTS] = {2, 2, 6, 2, 2, 2};
  fp_resolution* res = nullptr;
  REQUIRE(fp_resolve(c.ptr, m, 12, &res) == FP_OK);
  CHECK(fp_resolution_alpha(res) == 6);
  CHECK(fp_resolution_tau(res) == 9);
  CHECK(fp_resolution_sigma(res) == 10);
  CHECK(fp_resolution_max_degree(res) >= 12);
  CHECK(fp_resolution_hilbert(res, 8) == 11);
  CHECK(fp_resolution_generators(res, 8) == 3);
  CHECK(fp_resolution_syzygies(res, 9) == 3);
  CHECK(std::string(fp_resolution_f0(res)) == "R[-6] + R[-7] + R[-8]^3 + R[-10]^2");
  CHECK(std::string(fp_resolution_f1(res)) == "R[-8] + R[-9]^3 + R[-11]^2");
  fp_coeff norm[FP_POINTS];
  fp_resolution_multiplicities(res, norm);
  CHECK(norm[2] == 6);
  fp_resolution_free(res);

  const fp_coeff negative[FP_POINTS] = {-1, 0, 0, 0, 0, 0};
  CHECK(fp_resolve(c.ptr, negative, 0, &res) == FP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification report") {
  Config c;
  REQUIRE(fp_config_from_json(kFourLines, &c.ptr) == FP_OK);
  fp_report* report = nullptr;
  REQUIRE(fp_verify(c.ptr, 0, 6, 1, &report) == FP_OK);
  CHECK(fp_report_inconclusive(report) == 0);
  REQUIRE(fp_report_frame_count(report) == 1);
  fp_frame_summary s;
  REQUIRE(fp_report_frame(report, 0, &s) == FP_OK);
  CHECK(s.raw_count == 212);
  CHECK(s.pared_count == 39);
  CHECK(s.stabilized == 1);
  CHECK(s.stab_j == 1);
  CHECK(s.stab_k == 1);
  size_t first = 0;
  REQUIRE(fp_report_chain_size(report, 0, 1, &first) == FP_OK);
  CHECK(first == 9);
  CHECK(fp_report_chain_size(report, 0, 0, &first) == FP_ERR_INVALID_ARGUMENT);
  const size_t n = fp_report_entry_count(report, 0);
  CHECK(n > 0);
  for (size_t i = 0; i < n; ++i) {
    fp_entry e;
    REQUIRE(fp_report_entry(report, 0, i, &e) == FP_OK);
    CHECK(e.status != FP_CERT_INCONCLUSIVE);
    CHECK(std::strlen(e.reason) > 0);
  }
  for (size_t i = 0; i < fp_report_tail_count(report, 0); ++i) {
    fp_tail t;
    REQUIRE(fp_report_tail(report, 0, i, &t) == FP_OK);
    CHECK(t.covered == 1);
  }
  fp_class_list* neg = nullptr;
  REQUIRE(fp_report_frame_neg(report, 0, &neg) == FP_OK);
  CHECK(list_size_and_free(neg) == 13);
  CHECK(fp_report_frame(report, 1, &s) == FP_ERR_INVALID_ARGUMENT);
  fp_report_free(report);
}

TEST_CASE("oracle") {
  Config json_config;
  REQUIRE(fp_config_from_json(kFourLines, &json_config.ptr) == FP_OK);
  const fp_coeff m[FP_POINTS] = {2, 2, 6, 2, 2, 2};
  fp_oracle_result r;
  CHECK(fp_oracle(json_config.ptr, m, 8, &r) != FP_OK);

  Config c;
  REQUIRE(fp_config_from_case("iv", &c.ptr) == FP_OK);
  CHECK(fp_config_has_points(c.ptr) == 1);
  REQUIRE(fp_oracle(c.ptr, m, 8, &r) == FP_OK);
  CHECK(r.dim == 11);
  CHECK(r.dim_next == 19);
  REQUIRE(fp_oracle(c.ptr, m, 6, &r) == FP_OK);
  CHECK(r.ker == 0);
  CHECK(r.cok == 1);
  fp_config* missing = nullptr;
  CHECK(fp_config_from_case("v", &missing) == FP_ERR_INVALID_ARGUMENT);
}
