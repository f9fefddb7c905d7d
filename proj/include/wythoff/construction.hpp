#pragma once

#include <array>
#include <string>
#include <vector>

#include "wythoff/catalog.hpp"
#include "wythoff/geom3.hpp"
#include "wythoff/group.hpp"

namespace wythoff {

using FaceType = std::array<int, 2>;

// Face types {i, j}, i < j, spanning polygons for initial vertices of type I.
std::vector<FaceType> index_pairs(IndexSet iset);

std::string to_string(const FaceType& t);

struct ExcludedMirror {
  std::string label;
  AffineSubspace mirror;
};

// Where initial vertices of type I may go: the common mirror of the r_i with
// i outside I, cut down to the placement domain, minus the excluded mirrors.
// Points are addressed by orthonormal coordinates around `origin`.
struct AdmissibleSet {
  IndexSet iset;
  bool empty = true;
  std::string reason;
  AffineSubspace affine_hull;
  std::vector<ExcludedMirror> excluded;
  std::vector<Vec3> region;
  Vec3 origin;
  std::vector<Vec3> basis;
  // a . u <= b in parameter coordinates
  std::vector<std::pair<std::vector<double>, double>> bounds;
  std::vector<double> defaults;

  int dimension() const { return static_cast<int>(basis.size()); }
  Vec3 point(const std::vector<double>& params) const;
  std::vector<double> params_of(const Vec3& p) const;
  // Signed slack of the tightest bound (positive inside).
  double slack(const std::vector<double>& params) const;
  bool on_excluded(const Vec3& p, double tol = kEpsPoint) const;
};

AdmissibleSet admissible_set(const PolyhedronSpec& spec, IndexSet iset);

struct Halfspace {
  Vec3 normal;
  double offset = 0;  // normal . x < offset
};

// Dirichlet region of the seed, clipped to a cube of half-size window.radius.
struct FundamentalRegion {
  Vec3 seed;
  std::vector<Halfspace> halfspaces;
  std::vector<std::vector<Vec3>> facets;
  // Facets on the clipping cube, which mark directions the region extends in.
  std::vector<std::vector<Vec3>> box_facets;

  bool contains(const Vec3& p, double tol = kEpsPoint) const;
  bool bounded() const { return box_facets.empty(); }
};

FundamentalRegion fundamental_region(const GeneratorSet& gens, const Vec3& seed,
                                     double radius);

// Checked initial vertex; empty params select the defaults.
Vec3 place_vertex(const PolyhedronSpec& spec, IndexSet iset, const std::vector<double>& params);

struct BaseFace {
  FaceType ftype{};
  std::vector<Vec3> points;
  bool closed = true;
};

// Faces through v, walked along alternating products of the pair. Infinite
// faces extend `steps` vertices each way.
std::vector<BaseFace> base_faces(const GeneratorSet& gens, IndexSet iset, const Vec3& v,
                                 int steps = 8);

struct Edge {
  int a = 0, b = 0;  // a < b
  int type = 0;
};

struct FaceRecord {
  FaceType ftype{};
  std::vector<int> cycle;
  bool closed = true;
};

struct Wythoffian {
  PolyhedronSpec source;
  IndexSet iset;
  std::vector<double> params;
  Vec3 initial_vertex;
  int initial_id = -1;
  Window window;
  double interior_margin = 0;
  std::vector<Vec3> vertices;
  std::vector<Edge> edges;
  std::vector<FaceRecord> faces;

  bool is_interior(int id) const;
  std::vector<int> interior_vertices() const;
};

struct BuildOptions {
  std::optional<Vec3> center;  // defaults to the initial vertex
  double radius = 4.0;
  int max_word = 4000;
  std::size_t element_cap = 200000;
  bool validate = true;
};

Wythoffian build(const PolyhedronSpec& spec, IndexSet iset, const std::vector<double>& params,
                 const BuildOptions& options = {});

// Build from an explicit initial vertex; only the fixed-generator pattern is checked.
Wythoffian build_at(const PolyhedronSpec& spec, IndexSet iset, const Vec3& v,
                    const BuildOptions& options = {});

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate(const Wythoffian& w);

}  // namespace wythoff
