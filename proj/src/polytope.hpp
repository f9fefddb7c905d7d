#pragma once

// Small convex-geometry helpers for placement domains and Dirichlet regions.

#include <vector>

#include "wythoff/geom3.hpp"

namespace wythoff::detail {

struct Frame {
  Vec3 origin;
  std::vector<Vec3> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<double> local(const Vec3& p) const;
  Vec3 global(const std::vector<double>& u) const;
};

// Origin at the point nearest `ref`; directions taken from the remaining
// points in order of distance from `ref`.
Frame frame_of(const std::vector<Vec3>& pts, const Vec3& ref);

using Row = std::pair<std::vector<double>, double>;  // a . u <= b

// Facet inequalities of the convex hull of points given in a frame of dimension dim.
std::vector<Row> hrep_of(const std::vector<std::vector<double>>& pts, int dim);

// Vertices of conv(pts) intersected with s; empty when they miss.
std::vector<Vec3> intersect_with_subspace(const std::vector<Vec3>& pts, const AffineSubspace& s);

// Convex polyhedron as a list of planar faces, each tagged with the plane
// label that produced it (-1 for the initial box).
struct Polyhedron {
  std::vector<std::vector<Vec3>> faces;
  std::vector<int> labels;

  static Polyhedron box(const Vec3& centre, double half);
  // Keeps n . x <= offset.
  void clip(const Vec3& n, double offset, int label);
  bool empty() const { return faces.empty(); }
};

double polygon_area(const std::vector<Vec3>& poly);

}  // namespace wythoff::detail
