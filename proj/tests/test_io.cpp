#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wythoff/catalog.hpp"
#include "wythoff/errors.hpp"
#include "wythoff/io.hpp"

using namespace wythoff;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "wythoff_io_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("OFF text of the cuboctahedron") {
  Wythoffian w = build(lookup("{3,4}"), IndexSet{1}, {});
  MeshDocument m = to_mesh(w);
  CHECK(m.metadata.at("name") == "{3,4}");
  CHECK(m.metadata.at("iset") == "1");
  CHECK(m.metadata.count("params") == 1);
  CHECK(m.metadata.count("window") == 1);
  std::istringstream in(off_text(m));
  std::string magic;
  std::size_t v = 0, f = 0, e = 0;
  in >> magic >> v >> f >> e;
  CHECK(magic == "OFF");
  CHECK(v == 12);
  CHECK(f == 14);
  CHECK(e == 24);
  CHECK(paths_text(m).empty());
}

TEST_CASE("OFF export with an apeirogon sidecar") {
  fs::path dir = scratch_dir();
  Wythoffian w = build(lookup("{inf,4}_4"), IndexSet{0}, {});
  std::string sidecar = export_off(w, (dir / "zigzag.off").string());
  REQUIRE_FALSE(sidecar.empty());
  CHECK(fs::path(sidecar).extension() == ".paths");
  std::string paths = slurp(sidecar);
  std::istringstream lines(paths);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.size() > 5);
    CHECK(line.substr(line.size() - 5) == " open");
    ++count;
  }
  CHECK(count > 0);
  CHECK(slurp(dir / "zigzag.off").rfind("OFF\n", 0) == 0);

  Wythoffian closed = build(lookup("{3,4}"), IndexSet{0}, {});
  CHECK(export_off(closed, (dir / "octahedron.off").string()).empty());
  CHECK(slurp(dir / "octahedron.off").rfind("OFF\n6 8 12\n", 0) == 0);
}

TEST_CASE("export failures") {
  BuildOptions o;
  o.center = Vec3{50, 0, 0};
  o.radius = 1;
  Wythoffian empty = build(lookup("{3,4}"), IndexSet{0}, {}, o);
  try {
    export_off(empty, (scratch_dir() / "empty.off").string());
    FAIL("expected EmptyMesh");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyMesh);
  }
  Wythoffian w = build(lookup("{3,4}"), IndexSet{0}, {});
  try {
    export_off(w, "/nonexistent-dir/x.off");
    FAIL("expected IOError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IOError);
  }
}

TEST_CASE("report for ({6,4}_3,{0,1,2})") {
  AnalysisReport r = analyze(lookup("{6,4}_3"), IndexSet{0, 1, 2}, {});
  CHECK(r.realizable);
  CHECK(r.vertex_symbol == "(4bx.8c.12s)");
  CHECK(r.vertex_count == 48);
  CHECK(r.edge_count == 72);
  CHECK(r.faces_by_type.at("01") + r.faces_by_type.at("02") + r.faces_by_type.at("12") == 22);
  CHECK(r.faces.size() == 3);
  CHECK_FALSE(r.uniform);

  nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "iset", "params", "realizable", "counts",
                                         "vertex_symbol", "faces", "uniform"});
  CHECK(j["counts"]["v"] == 48);
}

TEST_CASE("non-realizable index sets give a report, not an error") {
  AnalysisReport r = analyze(lookup("{6,3}_4"), IndexSet{2}, {});
  CHECK_FALSE(r.realizable);
  CHECK(r.vertex_count == 0);
  CHECK(r.name == "{6,3}_4");
  CHECK(r.iset == "2");
}

TEST_CASE("report round trip") {
  for (const char* name : {"{4,4}#{inf}", "{6,6|3}", "{3,4}"}) {
    AnalysisReport r = analyze(lookup(name), IndexSet{0, 2}, {});
    AnalysisReport back = parse_report(report_json(r));
    CHECK(back == r);
    CHECK(parse_report(report_json(r, -1)) == r);
  }
  fs::path out = scratch_dir() / "report.json";
  AnalysisReport r = analyze(lookup("{4,4}"), IndexSet{0, 1}, {0.29289321881345254});
  export_report(r, out.string());
  CHECK(parse_report(slurp(out)) == r);
  CHECK(r.uniform);
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(parse_report("{"), Error);
  CHECK_THROWS_AS(parse_report(R"({"name": "x"})"), Error);
  try {
    parse_report("[]");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IOError);
  }
}
