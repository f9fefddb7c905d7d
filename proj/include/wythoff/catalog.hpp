#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wythoff/geom3.hpp"
#include "wythoff/group.hpp"

namespace wythoff {

// A plane the initial vertex must avoid for the listed index sets
// (all of them when applies_to is empty).
struct Exclusion {
  std::string label;
  Isometry reflection;
  std::vector<IndexSet> applies_to;

  bool applies(IndexSet iset) const;
};

enum class BlendKind { Segment, Apeirogon };

struct PolyhedronSpec {
  std::string name;
  GeneratorSet gens;
  int schlafli_p = 0;  // kInfinite for apeirogonal faces
  int schlafli_q = 0;
  std::array<int, 3> mirror_vector{};
  bool finite = false;
  std::optional<double> blend_scale;

  // Convex hull of these points is where initial vertices are placed.
  // domain[0] is the base vertex.
  std::vector<Vec3> domain;
  std::vector<Exclusion> exclusions;
  // Plane reflections s0, s1, s2 of the underlying planar tiling, when known.
  std::optional<std::array<Isometry, 3>> planar_reflections;
  // Set on blends so Petrie duality can act on the planar component.
  std::optional<BlendKind> blend_kind;
  std::shared_ptr<const PolyhedronSpec> blend_base;
};

const std::vector<std::string>& catalog_names();

// Accepts the ASCII names of catalog_names(); also "∞" for "inf".
PolyhedronSpec lookup(std::string_view name);

PolyhedronSpec petrie(const PolyhedronSpec& spec);
PolyhedronSpec dual(const PolyhedronSpec& spec);

// Height of the blend slab relative to the unit tiling. Small enough that the
// uniform P^02 of {4,4}#{inf} has its vertex inside the placement prism.
inline constexpr double kDefaultBlendScale = 0.25;

PolyhedronSpec blend(const PolyhedronSpec& planar, BlendKind kind,
                     double scale = kDefaultBlendScale);

// Copy of spec moved by phi (generators conjugated, domain mapped).
PolyhedronSpec conjugate(const PolyhedronSpec& spec, const Isometry& phi);

// Relations plus mirror vector; throws RelationViolated.
void validate_spec(const PolyhedronSpec& spec);

// Dimensions of the mirrors of r0, r1, r2.
std::array<int, 3> compute_mirror_vector(const GeneratorSet& gens);

bool same_generators(const PolyhedronSpec& a, const PolyhedronSpec& b, double tol = 1e-9);
bool same_generators(const GeneratorSet& a, const GeneratorSet& b, double tol = 1e-9);

std::string schlafli_string(const PolyhedronSpec& spec);

}  // namespace wythoff
