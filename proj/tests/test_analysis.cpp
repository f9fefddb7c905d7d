#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "wythoff/analysis.hpp"
#include "wythoff/catalog.hpp"
#include "wythoff/construction.hpp"
#include "wythoff/errors.hpp"

using namespace wythoff;

namespace {

std::vector<Vec3> regular_polygon(int n, int step = 1) {
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k) {
    double a = 2 * kPi * k * step / n;
    pts.push_back({std::cos(a), std::sin(a), 0});
  }
  return pts;
}

// Vertices of a square antiprism's side zigzag: alternate heights.
std::vector<Vec3> skew_polygon(int n) {
  std::vector<Vec3> pts = regular_polygon(n);
  for (int k = 0; k < n; ++k) pts[k].z = k % 2 ? 0.4 : -0.4;
  return pts;
}

FaceClass closed_class(const std::vector<Vec3>& pts) {
  return classify_points(pts, true, lookup("{3,4}").gens, {0, 1}, IndexSet{0});
}

}  // namespace

TEST_CASE("closed polygon classes") {
  FaceClass hex = closed_class(regular_polygon(6));
  CHECK(hex.shape == FaceShape::ConvexPlanar);
  CHECK(hex.regular);
  CHECK(hex.symbol() == "6c");

  FaceClass star = closed_class(regular_polygon(5, 2));
  CHECK(star.shape == FaceShape::StarPlanar);
  CHECK(star.size == 5);

  FaceClass skew = closed_class(skew_polygon(4));
  CHECK(skew.shape == FaceShape::SkewFinite);
  CHECK(skew.symbol() == "4s");
  CHECK(skew.regular);

  // bow tie: a self-crossing planar quadrilateral
  FaceClass bow = closed_class({{0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}});
  CHECK(bow.shape == FaceShape::CrossedPlanar);
  CHECK(bow.symbol() == "4bx");
  CHECK_FALSE(bow.regular);

  FaceClass rect = closed_class({{0, 0, 0}, {2, 0, 0}, {2, 1, 0}, {0, 1, 0}});
  CHECK(rect.shape == FaceShape::ConvexPlanar);
  CHECK_FALSE(rect.regular);
}

TEST_CASE("regularity tests agree") {
  CHECK(is_regular_polygon(regular_polygon(8), true));
  CHECK(has_regular_symmetry(regular_polygon(8)));
  CHECK(is_regular_polygon(skew_polygon(6), true));
  CHECK(has_regular_symmetry(skew_polygon(6)));
  std::vector<Vec3> bent = skew_polygon(6);
  bent[0].z = -0.5;
  CHECK_FALSE(is_regular_polygon(bent, true));
  CHECK_FALSE(has_regular_symmetry(bent));
}

TEST_CASE("local invariants of a square") {
  LocalInvariants inv = local_invariants({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, true);
  REQUIRE(inv.lengths.size() == 4);
  for (double l : inv.lengths) CHECK(l == doctest::Approx(1));
  for (double a : inv.angles) CHECK(a == doctest::Approx(kPi / 2));
  for (double t : inv.torsions) CHECK(std::abs(t) < 1e-9);
}

TEST_CASE("vertex symbol text") {
  CHECK(parse_vertex_symbol("(4c.8c.8c)").str() == "(4c.8c^2)");
  CHECK(canonicalize(parse_vertex_symbol("(8c.4c.8c)")).str() == "(4c.8c^2)");
  CHECK(canonicalize(parse_vertex_symbol("(inf_4.4s.inf_4.4s)")).str() == "(4s.inf_4.4s.inf_4)");
  CHECK(canonicalize(parse_vertex_symbol("(6c.4c.6c.4c)")).str() == "(4c.6c.4c.6c)");
  CHECK(parse_vertex_symbol("(tinf_2^2.4c)").entries.size() == 3);
  CHECK(parse_vertex_symbol("4c.8c^2").str() == "(4c.8c^2)");
  CHECK_THROWS_AS(parse_vertex_symbol("(4c..8c)"), Error);
  CHECK_THROWS_AS(parse_vertex_symbol("(4c^0)"), Error);
  CHECK_THROWS_AS(parse_vertex_symbol("(4c^2x)"), Error);
  CHECK_THROWS_AS(parse_vertex_symbol("(4q)"), Error);
}

TEST_CASE("bare entries are wildcards") {
  VertexSymbol got = parse_vertex_symbol("(4c.8c^2)");
  CHECK(symbol_matches(got, parse_vertex_symbol("(4.8.8)")));
  CHECK(symbol_matches(got, parse_vertex_symbol("(8c.4.8)")));
  CHECK_FALSE(symbol_matches(got, parse_vertex_symbol("(4s.8c^2)")));
  CHECK_FALSE(symbol_matches(got, parse_vertex_symbol("(4.8)")));
  CHECK_FALSE(symbol_matches(parse_vertex_symbol("(4c.inf_2)"), parse_vertex_symbol("(4.inf)")));
}

TEST_CASE("vertex figures") {
  Wythoffian cube = build(lookup("{4,3}"), IndexSet{0}, {});
  VertexFigure f = vertex_figure(cube, cube.initial_id);
  CHECK(f.neighbors.size() == 3);
  CHECK(f.faces.size() == 3);
  CHECK(vertex_symbol_at(cube, cube.initial_id).str() == "(4c^3)");
}

TEST_CASE("symbols of open faces") {
  CHECK(vertex_symbol(build(lookup("{inf,4}_4"), IndexSet{0}, {})).str() == "(inf_2^4)");
  CHECK(vertex_symbol(build(lookup("{4,4}#{inf}"), IndexSet{0}, {})).str() == "(inf_4^4)");
  CHECK(vertex_symbol(build(lookup("{inf,4}_4"), IndexSet{0, 1}, {})).str() == "(4c.tinf_2^2)");
}

TEST_CASE("uniform truncated square tiling against the oracle") {
  // r0: x = 1/2, r1: y = x, r2: y = 0; vertex (t, 0, 0).
  oracle::Affine r0 = oracle::reflect({1, 0, 0}, 0.5), r1 = oracle::reflect({-1, 1, 0}, 0);
  auto gap = [&](double t) {
    std::array<double, 3> v{t, 0, 0};
    return oracle::dist(v, r0.apply(v)) - oracle::dist(v, r1.apply(v));
  };
  double t = oracle::bisect(gap, 1e-6, 0.5 - 1e-6);
  CHECK(t == doctest::Approx(0.29289321881345254).epsilon(1e-12));
  UniformSearchResult r = find_uniform_vertex(lookup("{4,4}"), IndexSet{0, 1});
  REQUIRE(r.found);
  REQUIRE(r.params.size() == 1);
  CHECK(r.params[0] == doctest::Approx(t).epsilon(1e-10));
  CHECK(r.edge_length_spread < 1e-10);
}

TEST_CASE("uniform truncated octahedron against the oracle") {
  // vertex (1 - u/sqrt2, u/sqrt2, 0) on the r2 mirror of {3,4}
  auto m = oracle::octahedron_mirrors();
  auto gap = [&](double u) {
    std::array<double, 3> v{1 - u / std::sqrt(2.0), u / std::sqrt(2.0), 0};
    return oracle::dist(v, m[0].apply(v)) - oracle::dist(v, m[1].apply(v));
  };
  double u = oracle::bisect(gap, 1e-6, 0.7);
  CHECK(u == doctest::Approx(0.47140452079103168).epsilon(1e-12));
  UniformSearchResult r = find_uniform_vertex(lookup("{3,4}"), IndexSet{0, 1});
  REQUIRE(r.found);
  CHECK(r.params[0] == doctest::Approx(u).epsilon(1e-10));
  Wythoffian w = build(lookup("{3,4}"), IndexSet{0, 1}, r.params);
  CHECK(vertex_symbol(w).str() == "(4c.6c^2)");
  CHECK(is_uniform(w).uniform);
}

TEST_CASE("non-uniformizable cases report the best spread") {
  // equal edges are reachable here; the skew 12-gons are what fail
  PolyhedronSpec s = lookup("{4,6|4}");
  UniformSearchResult r = find_uniform_vertex(s, IndexSet{1, 2});
  CHECK_FALSE(r.found);
  UniformityReport u = is_uniform_at(s, IndexSet{1, 2}, place_vertex(s, IndexSet{1, 2}, r.params));
  CHECK_FALSE(u.uniform);
  CHECK_FALSE(u.failing_faces.empty());
  UniformSearchResult z = find_uniform_vertex(lookup("{inf,4}_4"), IndexSet{0, 1});
  CHECK_FALSE(z.found);
}

TEST_CASE("edge spread vanishes at a uniform vertex and not elsewhere") {
  PolyhedronSpec s = lookup("{4,4}");
  IndexSet i{0, 1};
  AdmissibleSet a = admissible_set(s, i);
  CHECK(edge_length_spread(s.gens, i, a.point({0.29289321881345254})) < 1e-12);
  CHECK(edge_length_spread(s.gens, i, a.point({0.2})) > 0.1);
  CHECK(is_uniform_at(s, i, a.point({0.29289321881345254})).uniform);
  UniformityReport bad = is_uniform_at(s, i, a.point({0.2}));
  CHECK_FALSE(bad.uniform);
}

TEST_CASE("faces of the blended square tilings") {
  PolyhedronSpec seg = lookup("{4,4}#{}");
  AdmissibleSet a = admissible_set(seg, IndexSet{0});
  Wythoffian w = build(seg, IndexSet{0}, a.params_of(seg.domain[0]));
  for (const FaceRecord& f : w.faces) {
    FaceClass c = classify_face(f, w);
    CHECK(c.shape == FaceShape::SkewFinite);
    CHECK(c.size == 4);
    CHECK(c.regular);
  }
  PolyhedronSpec ape = lookup("{4,4}#{inf}");
  Wythoffian h = build(ape, IndexSet{0}, {});
  int helices = 0;
  for (const FaceRecord& f : h.faces) {
    if (f.closed || f.cycle.size() < 4) continue;
    FaceClass c = classify_face(f, h);
    CHECK(c.shape == FaceShape::Helical);
    CHECK(c.helix_k == 4);
    CHECK(c.regular);
    ++helices;
  }
  CHECK(helices > 0);
}

TEST_CASE("the vertex figure of the Petrie octahedron's medial polyhedron is crossed") {
  PolyhedronSpec s = lookup("{6,4}_3");
  Wythoffian w = build(s, IndexSet{1}, {});
  VertexFigure f = vertex_figure(w, w.initial_id);
  REQUIRE(f.points.size() == 4);
  FaceClass c = classify_points(f.points, true, s.gens, {0, 1}, IndexSet{1});
  CHECK(c.shape == FaceShape::CrossedPlanar);
}

TEST_CASE("truncated Petrie octahedron: skew dodecagons and squares") {
  Wythoffian w = build(lookup("{6,4}_3"), IndexSet{0, 1}, {});
  CHECK(w.vertices.size() == 24);
  int dodecagons = 0, squares = 0;
  for (const FaceRecord& f : w.faces) {
    FaceClass c = classify_face(f, w);
    if (c.shape == FaceShape::SkewFinite && c.size == 12) {
      ++dodecagons;
      CHECK_FALSE(c.regular);
    }
    if (c.shape == FaceShape::ConvexPlanar && c.size == 4) ++squares;
  }
  CHECK(dodecagons == 4);
  CHECK(squares == 6);
  CHECK(w.faces.size() == 10);
}

TEST_CASE("finite symbols follow the ringed-diagram pattern") {
  for (const char* name : {"{3,4}", "{4,3}", "{6,4}_3", "{6,3}_4"}) {
    PolyhedronSpec s = lookup(name);
    std::string p = std::to_string(s.schlafli_p), q = std::to_string(s.schlafli_q);
    std::string p2 = std::to_string(2 * s.schlafli_p), q2 = std::to_string(2 * s.schlafli_q);
    std::vector<std::pair<IndexSet, std::string>> rows{
        {IndexSet{1}, "(" + p + "." + q + "." + p + "." + q + ")"},
        {IndexSet{0, 1}, "(" + p2 + "." + p2 + "." + q + ")"},
        {IndexSet{0, 2}, "(" + p + ".4." + q + ".4)"},
        {IndexSet{0, 1, 2}, "(" + p2 + "." + q2 + ".4)"}};
    for (const auto& [iset, pattern] : rows) {
      CAPTURE(name);
      CAPTURE(iset.str());
      if (admissible_set(s, iset).empty) continue;
      CHECK(symbol_matches(vertex_symbol(build(s, iset, {})), parse_vertex_symbol(pattern)));
    }
  }
}
