#include <doctest.h>

#include <cstring>
#include <string>

#include "orbiquot.h"

TEST_CASE("version string") {
  const char* v = oq_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v) == "0.1.0");
}

TEST_CASE("matrix parse and rank") {
  oq_matrix* m = nullptr;
  REQUIRE(oq_matrix_parse("1 0 1 1; 0 1 1 1; 1 1 0 1", &m, nullptr) == OQ_OK);
  REQUIRE(m != nullptr);
  CHECK(oq_matrix_torus_rank(m) == 3);
  oq_matrix_free(m);

  oq_matrix* o = nullptr;
  REQUIRE(oq_matrix_parse("1 0 1\n0 1 1", &o, nullptr) == OQ_OK);
  CHECK(oq_matrix_torus_rank(o) == 2);
  oq_matrix_free(o);
}

TEST_CASE("parse error codes") {
  oq_matrix* m = nullptr;
  char* err = nullptr;
  CHECK(oq_matrix_parse("1 2\n3 4", &m, &err) == OQ_ESHAPE);
  REQUIRE(err != nullptr);
  CHECK(std::strlen(err) > 0);
  oq_string_free(err);
  err = nullptr;
  CHECK(oq_matrix_parse("1 0 1 z; 0 1 1 1; 1 1 0 1", &m, &err) == OQ_EPARSE);
  oq_string_free(err);
  CHECK(oq_matrix_parse(nullptr, &m, nullptr) == OQ_EUSAGE);
  CHECK(oq_matrix_parse("1 0 1 1; 0 1 1 1; 1 1 0 1", nullptr, nullptr) ==
        OQ_EUSAGE);
}

TEST_CASE("check through the c interface") {
  oq_matrix* m = nullptr;
  REQUIRE(oq_matrix_parse("1 0 1 1; 0 1 1 1; 1 1 0 1", &m, nullptr) == OQ_OK);
  oq_options opts = oq_default_options();
  opts.json = 1;
  char* out = nullptr;
  char* err = nullptr;
  CHECK(oq_run_check(m, &opts, &out, &err) == OQ_OK);
  REQUIRE(out != nullptr);
  CHECK(std::strstr(out, "\"admissible\": true") != nullptr);
  oq_string_free(out);
  oq_string_free(err);
  oq_matrix_free(m);
}

TEST_CASE("failing check maps to OQ_FAIL") {
  oq_matrix* m = nullptr;
  REQUIRE(oq_matrix_parse("1 1 1 1; 2 2 2 2; 3 3 3 3", &m, nullptr) == OQ_OK);
  oq_options opts = oq_default_options();
  char* out = nullptr;
  char* err = nullptr;
  CHECK(oq_run_check(m, &opts, &out, &err) == OQ_FAIL);
  oq_string_free(out);
  oq_string_free(err);
  oq_matrix_free(m);
}

TEST_CASE("null matrix is a usage error") {
  oq_options opts = oq_default_options();
  char* out = nullptr;
  CHECK(oq_run_check(nullptr, &opts, &out, nullptr) == OQ_EUSAGE);
  CHECK(out == nullptr);
}

TEST_CASE("verify through the c interface") {
  oq_options opts = oq_default_options();
  opts.json = 1;
  char* out = nullptr;
  char* err = nullptr;
  CHECK(oq_run_verify(&opts, &out, &err) == OQ_OK);
  REQUIRE(out != nullptr);
  CHECK(std::strstr(out, "\"refuted\": false") != nullptr);
  oq_string_free(out);
  oq_string_free(err);
}
