#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wythoff/wythoff.h"

namespace {

struct Poly {
  wy_polyhedron* p = nullptr;
  explicit Poly(const char* name) { REQUIRE(wy_polyhedron_lookup(name, &p) == WY_OK); }
  ~Poly() { wy_polyhedron_free(p); }
};

std::string symbol_of(const wy_build* b) {
  size_t len = 0;
  REQUIRE(wy_build_vertex_symbol(b, nullptr, 0, &len) == WY_ERR_BUFFER_TOO_SMALL);
  std::string out(len + 1, '\0');
  REQUIRE(wy_build_vertex_symbol(b, out.data(), out.size(), &len) == WY_OK);
  out.resize(len);
  return out;
}

}  // namespace

TEST_CASE("catalog through the C interface") {
  CHECK(wy_catalog_count() == 13);
  CHECK(std::string(wy_catalog_name(0)) == "{3,4}");
  CHECK(wy_catalog_name(13) == nullptr);
  wy_polyhedron* p = nullptr;
  CHECK(wy_polyhedron_lookup("{5,3}", &p) == WY_ERR_UNKNOWN_POLYHEDRON);
  CHECK(p == nullptr);
  CHECK(std::string(wy_last_error()).find("{5,3}") != std::string::npos);
  CHECK(wy_polyhedron_lookup(nullptr, &p) == WY_ERR_INVALID_ARGUMENT);
  CHECK(std::string(wy_status_name(WY_ERR_NOT_UNIFORMIZABLE)) == "not uniformizable");
}

TEST_CASE("polyhedron info, petrie, dual, blend") {
  Poly pc("{4,6|4}");
  wy_polyhedron_info info{};
  REQUIRE(wy_polyhedron_get_info(pc.p, &info) == WY_OK);
  CHECK(info.schlafli_p == 4);
  CHECK(info.schlafli_q == 6);
  CHECK(info.mirror_vector[0] == 2);
  CHECK(info.mirror_vector[1] == 1);
  CHECK(info.mirror_vector[2] == 2);
  CHECK(info.finite == 0);

  wy_polyhedron* d = nullptr;
  REQUIRE(wy_polyhedron_dual(pc.p, &d) == WY_OK);
  CHECK(std::string(wy_polyhedron_name(d)) == "{6,4|4}");
  wy_polyhedron_free(d);

  Poly oct("{3,4}");
  wy_polyhedron* pe = nullptr;
  REQUIRE(wy_polyhedron_petrie(oct.p, &pe) == WY_OK);
  CHECK(std::string(wy_polyhedron_name(pe)) == "{6,4}_3");
  wy_polyhedron_free(pe);

  Poly sq("{4,4}");
  wy_polyhedron* b = nullptr;
  REQUIRE(wy_polyhedron_blend(sq.p, 1, 0.5, &b) == WY_OK);
  CHECK(std::string(wy_polyhedron_name(b)) == "{4,4}#{inf}");
  REQUIRE(wy_polyhedron_get_info(b, &info) == WY_OK);
  CHECK(info.schlafli_p == -1);
  wy_polyhedron_free(b);
  CHECK(wy_polyhedron_blend(sq.p, 0, 0.0, &b) == WY_ERR_DEGENERATE_BLEND);
  CHECK(wy_default_blend_scale() == 0.25);
}

TEST_CASE("admissibility") {
  Poly p("{6,4}_3");
  int realizable = -1, dim = -2;
  REQUIRE(wy_admissible(p.p, "2", &realizable, &dim) == WY_OK);
  CHECK(realizable == 0);
  CHECK(dim == -1);
  REQUIRE(wy_admissible(p.p, "012", &realizable, &dim) == WY_OK);
  CHECK(realizable == 1);
  CHECK(dim == 2);
  CHECK(wy_admissible(p.p, "9", &realizable, &dim) == WY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("builds, counts and symbols") {
  Poly oct("{3,4}");
  wy_build* b = nullptr;
  REQUIRE(wy_build_create(oct.p, "1", nullptr, 0, 0, &b) == WY_OK);
  wy_counts c{};
  REQUIRE(wy_build_counts(b, &c) == WY_OK);
  CHECK(c.vertices == 12);
  CHECK(c.edges == 24);
  CHECK(c.closed_faces == 14);
  CHECK(c.open_faces == 0);
  double xyz[3];
  REQUIRE(wy_build_vertex(b, 0, xyz) == WY_OK);
  CHECK(std::sqrt(xyz[0] * xyz[0] + xyz[1] * xyz[1] + xyz[2] * xyz[2]) ==
        doctest::Approx(std::sqrt(0.5)));
  CHECK(wy_build_vertex(b, 12, xyz) == WY_ERR_INVALID_ARGUMENT);
  CHECK(symbol_of(b) == "(3c.4c.3c.4c)");
  int uniform = 0;
  double spread = 1;
  REQUIRE(wy_build_is_uniform(b, &uniform, &spread) == WY_OK);
  CHECK(uniform == 1);
  CHECK(spread < 1e-12);

  char small[4];
  size_t len = 0;
  CHECK(wy_build_report_json(b, small, sizeof small, &len) == WY_ERR_BUFFER_TOO_SMALL);
  std::string json(len + 1, '\0');
  REQUIRE(wy_build_report_json(b, json.data(), json.size(), &len) == WY_OK);
  CHECK(json.find("\"realizable\": true") != std::string::npos);

  std::string path = "capi_cuboctahedron.off";
  CHECK(wy_build_export_off(b, path.c_str()) == WY_OK);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char header[32] = {};
  CHECK(std::fgets(header, sizeof header, f) != nullptr);
  CHECK(std::string(header) == "OFF\n");
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(wy_build_export_off(b, "/nonexistent-dir/x.off") == WY_ERR_IO);
  wy_build_free(b);
}

TEST_CASE("build failures map to status codes") {
  Poly p("{6,4}_3");
  wy_build* b = nullptr;
  CHECK(wy_build_create(p.p, "2", nullptr, 0, 0, &b) == WY_ERR_NO_ADMISSIBLE_VERTEX);
  CHECK(b == nullptr);
  double bad[] = {5.0};
  Poly oct("{3,4}");
  CHECK(wy_build_create(oct.p, "01", bad, 1, 0, &b) == WY_ERR_PLACEMENT);
  CHECK(wy_build_create(oct.p, "01", nullptr, 1, 0, &b) == WY_ERR_INVALID_ARGUMENT);
  CHECK(wy_build_counts(nullptr, nullptr) == WY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reports for unrealizable sets") {
  Poly p("{6,3}_4");
  size_t len = 0;
  CHECK(wy_report_json(p.p, "2", nullptr, 0, 0, nullptr, 0, &len) == WY_ERR_BUFFER_TOO_SMALL);
  std::string json(len + 1, '\0');
  REQUIRE(wy_report_json(p.p, "2", nullptr, 0, 0, json.data(), json.size(), &len) == WY_OK);
  CHECK(json.find("\"realizable\": false") != std::string::npos);
}

TEST_CASE("uniform search") {
  Poly sq("{4,4}");
  double params[3] = {};
  size_t n = 0;
  double spread = 1;
  REQUIRE(wy_search_uniform(sq.p, "01", params, 3, &n, &spread) == WY_OK);
  CHECK(n == 1);
  CHECK(params[0] == doctest::Approx(0.29289321881345254).epsilon(1e-10));
  CHECK(wy_search_uniform(sq.p, "012", params, 0, &n, &spread) == WY_ERR_BUFFER_TOO_SMALL);
  CHECK(n == 2);

  Poly pc("{4,6|4}");
  CHECK(wy_search_uniform(pc.p, "12", params, 3, &n, &spread) == WY_ERR_NOT_UNIFORMIZABLE);
  CHECK(n == 1);
}
