#include "wythoff/catalog.hpp"

#include <algorithm>
#include <map>

#include "wythoff/errors.hpp"

namespace wythoff {

bool Exclusion::applies(IndexSet iset) const {
  if (applies_to.empty()) return true;
  return std::find(applies_to.begin(), applies_to.end(), iset) != applies_to.end();
}

namespace {

const std::vector<std::string> kNames = {
    "{3,4}",          "{4,3}",       "{6,4}_3",        "{6,3}_4",       "{4,4}",
    "{inf,4}_4",      "{4,4}#{}",    "{inf,4}_4#{}",   "{4,4}#{inf}",   "{inf,4}_4#{inf}",
    "{4,6|4}",        "{6,4|4}",     "{6,6|3}",
};

const std::map<std::string, std::string> kPetrieNames = {
    {"{3,4}", "{6,4}_3"},       {"{4,3}", "{6,3}_4"},
    {"{4,4}", "{inf,4}_4"},     {"{4,4}#{}", "{inf,4}_4#{}"},
    {"{4,4}#{inf}", "{inf,4}_4#{inf}"},
};

const std::map<std::string, std::string> kDualNames = {
    {"{3,4}", "{4,3}"}, {"{4,6|4}", "{6,4|4}"}, {"{4,4}", "{4,4}"}, {"{6,6|3}", "{6,6|3}"},
};

std::string normalize_name(std::string_view raw) {
  std::string s;
  for (std::size_t i = 0; i < raw.size();) {
    std::string_view rest = raw.substr(i);
    auto take = [&](std::string_view pat, std::string_view rep) {
      if (rest.substr(0, pat.size()) != pat) return false;
      s += rep;
      i += pat.size();
      return true;
    };
    if (take("∞", "inf") || take("₀", "_0") || take("₃", "_3") ||
        take("₄", "_4") || take("∅", ""))
      continue;
    if (raw[i] != ' ') s += raw[i];
    ++i;
  }
  return s;
}

Isometry plane(double a, double b, double c, double d) { return reflection({a, b, c}, d); }

// Octahedral reflections: x = y, y = z, z = 0.
const Isometry kS0 = plane(1, -1, 0, 0);
const Isometry kS1 = plane(0, 1, -1, 0);
const Isometry kS2 = plane(0, 0, 1, 0);

// Square tiling reflections: x = 1/2, y = x, y = 0.
const Isometry kQ0 = plane(1, 0, 0, 0.5);
const Isometry kQ1 = plane(-1, 1, 0, 0);
const Isometry kQ2 = plane(0, 1, 0, 0);

// Cubic honeycomb reflections: x = 1/2, x = y, y = z, z = 0.
const Isometry kT0 = plane(1, 0, 0, 0.5);
const Isometry kT1 = plane(1, -1, 0, 0);
const Isometry kT2 = plane(0, 1, -1, 0);
const Isometry kT3 = plane(0, 0, 1, 0);

Isometry c(const Isometry& a, const Isometry& b) { return compose(a, b); }
Isometry c(const Isometry& a, const Isometry& b, const Isometry& d) {
  return compose(a, compose(b, d));
}

const std::vector<Vec3> kOctaTriangle = {{1, 0, 0}, {0.5, 0.5, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
const std::vector<Vec3> kCubeTriangle = {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
const std::vector<Vec3> kSquareTriangle = {{0, 0, 0}, {0.5, 0, 0}, {0.5, 0.5, 0}};

PolyhedronSpec make(std::string name, GeneratorSet gens, int p, int q, bool finite,
                    std::vector<Vec3> domain) {
  PolyhedronSpec s;
  s.name = std::move(name);
  s.gens = gens;
  s.schlafli_p = p;
  s.schlafli_q = q;
  s.finite = finite;
  s.domain = std::move(domain);
  s.mirror_vector = compute_mirror_vector(gens);
  return s;
}

PolyhedronSpec build_entry(const std::string& name) {
  if (name == "{3,4}") return make(name, {{kS0, kS1, kS2}}, 3, 4, true, kOctaTriangle);
  if (name == "{4,3}") return make(name, {{kS2, kS1, kS0}}, 4, 3, true, kCubeTriangle);
  if (name == "{6,4}_3")
    return make(name, {{c(kS0, kS2), kS1, kS2}}, 6, 4, true, kOctaTriangle);
  if (name == "{6,3}_4")
    return make(name, {{c(kS2, kS0), kS1, kS0}}, 6, 3, true, kCubeTriangle);
  if (name == "{4,4}" || name == "{inf,4}_4") {
    PolyhedronSpec s = name == "{4,4}"
                           ? make(name, {{kQ0, kQ1, kQ2}}, 4, 4, false, kSquareTriangle)
                           : make(name, {{c(kQ0, kQ2), kQ1, kQ2}}, kInfinite, 4, false,
                                  kSquareTriangle);
    s.planar_reflections = std::array<Isometry, 3>{kQ0, kQ1, kQ2};
    return s;
  }
  if (name == "{4,4}#{}") return blend(lookup("{4,4}"), BlendKind::Segment);
  if (name == "{inf,4}_4#{}") return blend(lookup("{inf,4}_4"), BlendKind::Segment);
  if (name == "{4,4}#{inf}") return blend(lookup("{4,4}"), BlendKind::Apeirogon);
  if (name == "{inf,4}_4#{inf}") return blend(lookup("{inf,4}_4"), BlendKind::Apeirogon);
  if (name == "{4,6|4}")
    return make(name, {{kT0, c(kT1, kT3), kT2}}, 4, 6, false, kSquareTriangle);
  if (name == "{6,4|4}")
    return make(name, {{kT2, c(kT1, kT3), kT0}}, 6, 4, false,
                {{0.5, 0.5, 0}, {0.5, 0.25, 0.25}, {0, 0, 0}});
  if (name == "{6,6|3}") {
    Isometry t01 = c(kT0, kT1);
    Isometry w = c(t01, t01);
    return make(name, {{c(w, kT2, w), c(kT1, kT3), kT2}}, 6, 6, false,
                {{0, 0, 0}, {0, 0.5, 0.5}, {1, 1, 0}});
  }
  throw Error(ErrorCode::UnknownPolyhedron, "unknown polyhedron '" + name + "'");
}

std::string wrap(const std::string& op, const std::string& name) {
  std::string prefix = op + "(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')')
    return name.substr(prefix.size(), name.size() - prefix.size() - 1);
  return prefix + name + ")";
}

std::string mapped_name(const std::map<std::string, std::string>& table, const std::string& op,
                        const std::string& name) {
  for (const auto& [a, b] : table) {
    if (a == name) return b;
    if (b == name) return a;
  }
  return wrap(op, name);
}

int period_of(const Isometry& g) {
  int o = order(g, 64);
  return o == 0 ? kInfinite : o;
}

bool is_catalog_name(const std::string& name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

}  // namespace

const std::vector<std::string>& catalog_names() { return kNames; }

PolyhedronSpec lookup(std::string_view raw) {
  std::string name = normalize_name(raw);
  if (!is_catalog_name(name))
    throw Error(ErrorCode::UnknownPolyhedron, "unknown polyhedron '" + std::string(raw) + "'");
  return build_entry(name);
}

std::array<int, 3> compute_mirror_vector(const GeneratorSet& gens) {
  std::array<int, 3> v{};
  for (int i = 0; i < 3; ++i) v[i] = mirror(gens[i]).dimension;
  return v;
}

bool same_generators(const GeneratorSet& a, const GeneratorSet& b, double tol) {
  for (int i = 0; i < 3; ++i)
    if (!approx_equal(a[i], b[i], tol)) return false;
  return true;
}

bool same_generators(const PolyhedronSpec& a, const PolyhedronSpec& b, double tol) {
  return same_generators(a.gens, b.gens, tol);
}

std::string schlafli_string(const PolyhedronSpec& spec) {
  auto s = [](int n) { return n == kInfinite ? std::string("inf") : std::to_string(n); };
  return "{" + s(spec.schlafli_p) + "," + s(spec.schlafli_q) + "}";
}

PolyhedronSpec petrie(const PolyhedronSpec& spec) {
  if (spec.blend_base && spec.blend_kind)
    return blend(petrie(*spec.blend_base), *spec.blend_kind, spec.blend_scale.value_or(kDefaultBlendScale));
  std::string name = mapped_name(kPetrieNames, "petrie", spec.name);
  GeneratorSet g{{compose(spec.gens[0], spec.gens[2]), spec.gens[1], spec.gens[2]}};
  if (is_catalog_name(name)) {
    PolyhedronSpec known = lookup(name);
    if (same_generators(known.gens, g)) return known;
  }
  PolyhedronSpec out = spec;
  out.name = name;
  out.gens = g;
  out.schlafli_p = period_of(compose(g[0], g[1]));
  out.mirror_vector = compute_mirror_vector(g);
  return out;
}

PolyhedronSpec dual(const PolyhedronSpec& spec) {
  if (spec.schlafli_p == kInfinite)
    throw Error(ErrorCode::LocallyInfinite,
                "dual of " + spec.name + " would have vertices of infinite valency");
  std::string name = mapped_name(kDualNames, "dual", spec.name);
  GeneratorSet g{{spec.gens[2], spec.gens[1], spec.gens[0]}};
  if (is_catalog_name(name)) {
    PolyhedronSpec known = lookup(name);
    if (same_generators(known.gens, g)) return known;
  }
  PolyhedronSpec out = spec;
  out.name = name;
  out.gens = g;
  std::swap(out.schlafli_p, out.schlafli_q);
  std::reverse(out.domain.begin(), out.domain.end());
  std::reverse(out.mirror_vector.begin(), out.mirror_vector.end());
  for (Exclusion& e : out.exclusions)
    for (IndexSet& s : e.applies_to) {
      std::uint8_t m = 0;
      for (int i : s.members()) m |= static_cast<std::uint8_t>(1u << (2 - i));
      s = IndexSet(m);
    }
  out.blend_base.reset();
  out.blend_kind.reset();
  return out;
}

PolyhedronSpec blend(const PolyhedronSpec& planar, BlendKind kind, double scale) {
  if (!(scale > 0) || !std::isfinite(scale))
    throw Error(ErrorCode::DegenerateBlend, "blend scale must be positive");
  if (planar.blend_kind)
    throw Error(ErrorCode::InvalidArgument, planar.name + " is already a blend");
  for (int i = 0; i < 3; ++i) {
    const Isometry& g = planar.gens[i];
    Vec3 ez = g.linear * Vec3{0, 0, 1};
    if (!near(ez, {0, 0, 1}, 1e-9) || std::abs(g.shift.z) > 1e-9)
      throw Error(ErrorCode::InvalidArgument, planar.name + " does not act on the plane z = 0");
  }
  for (const Vec3& p : planar.domain)
    if (std::abs(p.z) > 1e-12)
      throw Error(ErrorCode::InvalidArgument, planar.name + " has a non-planar domain");

  Isometry t0 = reflection({0, 0, 1}, scale / 2);
  Isometry t1 = reflection({0, 0, 1}, -scale / 2);
  GeneratorSet g = planar.gens;
  g[0] = compose(g[0], t0);
  if (kind == BlendKind::Apeirogon) g[1] = compose(g[1], t1);

  PolyhedronSpec out;
  out.name = planar.name + (kind == BlendKind::Segment ? "#{}" : "#{inf}");
  out.gens = g;
  out.schlafli_p = period_of(compose(g[0], g[1]));
  out.schlafli_q = planar.schlafli_q;
  out.mirror_vector = compute_mirror_vector(g);
  out.finite = false;
  out.blend_scale = scale;
  out.blend_kind = kind;
  out.blend_base = std::make_shared<const PolyhedronSpec>(planar);

  const std::vector<Vec3>& t = planar.domain;
  double h = scale / 2;
  if (kind == BlendKind::Apeirogon && planar.schlafli_p == kInfinite && t.size() == 3) {
    // Apeirogonal faces: initial vertices stay in the plane of the base face.
    out.domain = {{t[0].x, t[0].y, -h}, {t[1].x, t[1].y, h}, {t[2].x, t[2].y, -h}};
  } else {
    for (double z : {-h, h})
      for (const Vec3& p : t) out.domain.push_back({p.x, p.y, z});
  }

  std::array<Isometry, 3> s;
  if (planar.planar_reflections) {
    s = *planar.planar_reflections;
  } else {
    s = planar.gens.r;
  }
  const std::vector<IndexSet> with0 = {IndexSet{0, 1}, IndexSet{0, 2}, IndexSet{0, 1, 2}};
  const std::vector<IndexSet> with1 = {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{0, 1, 2}};
  if (kind == BlendKind::Segment) out.exclusions.push_back({"t0", t0, {}});
  out.exclusions.push_back({"s0", s[0], with0});
  if (kind == BlendKind::Apeirogon) out.exclusions.push_back({"s1", s[1], with1});
  out.planar_reflections = s;
  return out;
}

PolyhedronSpec conjugate(const PolyhedronSpec& spec, const Isometry& phi) {
  Isometry inv = inverse(phi);
  auto conj = [&](const Isometry& g) { return compose(phi, compose(g, inv)); };
  PolyhedronSpec out = spec;
  for (int i = 0; i < 3; ++i) out.gens[i] = conj(spec.gens[i]);
  for (Vec3& p : out.domain) p = phi(p);
  for (Exclusion& e : out.exclusions) e.reflection = conj(e.reflection);
  if (out.planar_reflections)
    for (Isometry& g : *out.planar_reflections) g = conj(g);
  out.blend_base.reset();
  out.blend_kind.reset();
  return out;
}

void validate_spec(const PolyhedronSpec& spec) {
  require_relations(spec.gens, spec.schlafli_p, spec.schlafli_q);
  if (compute_mirror_vector(spec.gens) != spec.mirror_vector)
    throw Error(ErrorCode::RelationViolated, spec.name + ": mirror vector mismatch");
}

}  // namespace wythoff
