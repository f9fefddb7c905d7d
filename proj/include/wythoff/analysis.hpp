#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wythoff/construction.hpp"

namespace wythoff {

enum class FaceShape {
  ConvexPlanar,
  ConcavePlanar,
  StarPlanar,
  CrossedPlanar,
  SkewFinite,
  LinearApeirogon,
  Zigzag,
  TruncatedZigzag,
  Helical,
  HelicalTruncated,
};

const char* to_string(FaceShape shape);

struct FaceClass {
  FaceShape shape = FaceShape::ConvexPlanar;
  int size = 0;      // vertex count of finite faces, 0 for apeirogons
  int helix_k = 0;   // base polygon of a helix (before truncation)
  bool regular = false;

  bool infinite() const { return size == 0; }
  // Symbol text: "4c", "12s", "4bx", "inf", "inf_2", "tinf_2", "inf_4", "inf_8", ...
  std::string symbol() const;
};

// Face classes from explicit points. Open paths need at least four vertices.
FaceClass classify_points(const std::vector<Vec3>& pts, bool closed, const GeneratorSet& gens,
                          FaceType ftype, IndexSet iset);
FaceClass classify_face(const FaceRecord& face, const Wythoffian& w);

// Equal edges, equal angles, equal torsion magnitudes with a constant or
// alternating sign; relative tolerance tol.
bool is_regular_polygon(const std::vector<Vec3>& pts, bool closed, double tol = kRelTol);

// Regularity by explicit search for the two isometries p_k -> p_{k+1} and
// p_k -> p_{-k} of a closed polygon.
bool has_regular_symmetry(const std::vector<Vec3>& pts, double tol = 1e-7);

struct LocalInvariants {
  std::vector<double> lengths;
  std::vector<double> angles;    // turning geometry at vertices, in [0, pi]
  std::vector<double> torsions;  // signed, in (-pi, pi]
};

LocalInvariants local_invariants(const std::vector<Vec3>& pts, bool closed);

struct SymbolEntry {
  bool infinite = false;
  int size = 0;
  std::string tag;  // annotation of finite entries, full text of infinite ones

  std::string str() const;
  friend bool operator==(const SymbolEntry&, const SymbolEntry&) = default;
};

struct VertexSymbol {
  std::vector<SymbolEntry> entries;

  // Canonical cyclic form with runs written as e^m, e.g. "(4c.8c^2)".
  std::string str() const;
};

VertexSymbol parse_vertex_symbol(std::string_view text);
// Minimum over rotations and reversals.
VertexSymbol canonicalize(const VertexSymbol& s);
// Bare finite entries in `expected` accept any annotation.
bool symbol_matches(const VertexSymbol& computed, const VertexSymbol& expected);

struct VertexFigure {
  int vertex = -1;
  std::vector<int> neighbors;  // in cyclic order
  std::vector<int> faces;      // faces[k] contains neighbors[k] and neighbors[k+1]
  std::vector<Vec3> points;
};

VertexFigure vertex_figure(const Wythoffian& w, int vertex);
VertexSymbol vertex_symbol_at(const Wythoffian& w, int vertex);
// Checked to agree at every interior vertex.
VertexSymbol vertex_symbol(const Wythoffian& w);

struct UniformityReport {
  bool uniform = false;
  std::vector<FaceType> failing_faces;
  double edge_length_spread = 0;
};

double edge_length_spread(const GeneratorSet& gens, IndexSet iset, const Vec3& v);
UniformityReport is_uniform(const Wythoffian& w);
UniformityReport is_uniform_at(const PolyhedronSpec& spec, IndexSet iset, const Vec3& v);

struct UniformSearchResult {
  bool found = false;
  std::vector<double> params;
  double edge_length_spread = 0;  // at params, or the best seen when not found
};

UniformSearchResult find_uniform_vertex(const PolyhedronSpec& spec, IndexSet iset);

}  // namespace wythoff
