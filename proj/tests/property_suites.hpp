#pragma once
// Randomized property suites shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wythoff/analysis.hpp"
#include "wythoff/catalog.hpp"
#include "wythoff/construction.hpp"
#include "wythoff/errors.hpp"
#include "wythoff/group.hpp"

namespace props {

using namespace wythoff;

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool passed(int min_cases = 100) const { return failures == 0 && cases >= min_cases; }
};

inline const std::vector<std::string>& finite_names() {
  static const std::vector<std::string> v{"{3,4}", "{4,3}", "{6,4}_3", "{6,3}_4"};
  return v;
}

inline Isometry random_isometry(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Vec3 axis{u(rng), u(rng), u(rng)};
  if (norm(axis) < 1e-3) axis = {0, 0, 1};
  Isometry g = rotation(axis, 3.0 * u(rng), {u(rng), u(rng), u(rng)});
  if (u(rng) < 0) g = compose(reflection(normalized(Vec3{u(rng), u(rng), 1.0}), u(rng)), g);
  return g;
}

inline bool contains_element(const std::vector<Element>& elems, const Isometry& g) {
  return std::any_of(elems.begin(), elems.end(),
                     [&](const Element& e) { return approx_equal(e.iso, g, 1e-7); });
}

// Products and inverses of enumerated elements stay in the enumerated set.
inline SuiteResult group_closure(std::uint32_t seed, int cases = 120) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& names = catalog_names();
  for (int k = 0; k < cases; ++k) {
    PolyhedronSpec s = lookup(names[rng() % names.size()]);
    Vec3 base = s.domain[0];
    if (s.finite) {
      GroupElements g = enumerate_elements(s.gens, Window{{0, 0, 0}, 50.0});
      const auto& e = g.elements;
      const Isometry& a = e[rng() % e.size()].iso;
      const Isometry& b = e[rng() % e.size()].iso;
      r.check(g.complete && e.size() == 48 && contains_element(e, compose(a, b)) &&
                  contains_element(e, inverse(a)),
              s.name + ": finite group not closed");
      continue;
    }
    // Elements moving the base vertex at most 1.5 multiply into the radius-3 ball.
    EnumerateOptions opt;
    opt.probe = base;
    opt.margin = 0;
    GroupElements big = enumerate_elements(s.gens, Window{base, 3.2}, opt);
    std::vector<const Element*> near;
    for (const Element& e : big.elements)
      if (distance(e.iso(base), base) <= 1.5) near.push_back(&e);
    const Isometry& a = near[rng() % near.size()]->iso;
    const Isometry& b = near[rng() % near.size()]->iso;
    r.check(contains_element(big.elements, compose(a, b)) &&
                contains_element(big.elements, inverse(a)),
            s.name + ": windowed group not closed");
  }
  return r;
}

// A random admissible point of type I, away from the region boundary.
inline std::vector<double> random_params(const AdmissibleSet& a, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<double> w(a.region.size());
    double sum = 0;
    for (double& x : w) sum += (x = u(rng));
    Vec3 p;
    for (std::size_t i = 0; i < w.size(); ++i) p += a.region[i] * (w[i] / sum);
    std::vector<double> params = a.params_of(p);
    if (a.slack(params) > 1e-4 && !a.on_excluded(a.point(params), 1e-4)) return params;
  }
  return a.defaults;
}

// |orbit(v)| * |stab(v)| = |G| for finite groups, and the stabilizer is
// generated by the r_i with i outside I for every catalog entry.
inline SuiteResult orbit_stabilizer(std::uint32_t seed, int cases = 120) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& names = catalog_names();
  const auto& sets = all_index_sets();
  while (r.cases < cases) {
    bool finite_case = r.cases % 2 == 0;
    const std::string& name =
        finite_case ? finite_names()[rng() % 4] : names[rng() % names.size()];
    PolyhedronSpec s = lookup(name);
    IndexSet iset = sets[rng() % sets.size()];
    AdmissibleSet a = admissible_set(s, iset);
    if (a.empty) continue;
    Vec3 v = place_vertex(s, iset, random_params(a, rng));
    std::ostringstream what;
    what << name << " I=" << iset.str();
    bool ok = stabilizer_check(v, s.gens, iset);
    if (s.finite) {
      GroupElements g = enumerate_elements(s.gens, Window{{0, 0, 0}, 50.0});
      std::size_t stab = 0;
      for (const Element& e : g.elements) stab += near(e.iso(v), v) ? 1 : 0;
      std::size_t orb = orbit(v, s.gens, Window{{0, 0, 0}, 50.0}).size();
      ok = ok && orb * stab == g.elements.size();
      what << " orbit " << orb << " stab " << stab;
    }
    r.check(ok, what.str());
  }
  return r;
}

// Petrie duality is an involution on generator triples, also after moving the
// polyhedron by a random isometry.
inline SuiteResult petrie_involution(std::uint32_t seed, int cases = 120) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& names = catalog_names();
  for (int k = 0; k < cases; ++k) {
    PolyhedronSpec s = conjugate(lookup(names[rng() % names.size()]), random_isometry(rng));
    PolyhedronSpec p = petrie(s);
    PolyhedronSpec pp = petrie(p);
    bool ok = same_generators(pp, s, 1e-9) && verify_relations(p.gens, p.schlafli_p, p.schlafli_q).all_hold();
    r.check(ok, "petrie(petrie(" + s.name + ")) differs");
  }
  return r;
}

inline SuiteResult dual_involution(std::uint32_t seed, int cases = 120) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& names = catalog_names();
  while (r.cases < cases) {
    PolyhedronSpec base = lookup(names[rng() % names.size()]);
    if (base.schlafli_p == kInfinite) continue;
    PolyhedronSpec s = conjugate(base, random_isometry(rng));
    PolyhedronSpec d = dual(s);
    PolyhedronSpec dd = dual(d);
    bool ok = same_generators(dd, s, 1e-9) && d.schlafli_p == s.schlafli_q &&
              d.schlafli_q == s.schlafli_p;
    r.check(ok, "dual(dual(" + s.name + ")) differs");
  }
  return r;
}

// Canonical text is invariant under rotating and reversing the cycle.
inline SuiteResult canonicalization_invariance(std::uint32_t seed, int cases = 200) {
  static const std::vector<std::string> pool{"3c", "4c", "4s", "4bx", "6c", "6s", "8c", "8s",
                                             "12s", "12c", "4", "6", "inf", "inf_2", "tinf_2",
                                             "inf_4", "inf_8"};
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int k = 0; k < cases; ++k) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<std::string> parts;
    for (int i = 0; i < n; ++i) parts.push_back(pool[rng() % pool.size()]);
    auto text = [](const std::vector<std::string>& ps) {
      std::string t = "(";
      for (std::size_t i = 0; i < ps.size(); ++i) t += (i ? "." : "") + ps[i];
      return t + ")";
    };
    std::vector<std::string> moved = parts;
    std::rotate(moved.begin(), moved.begin() + rng() % n, moved.end());
    if (rng() % 2) std::reverse(moved.begin(), moved.end());
    std::string a = canonicalize(parse_vertex_symbol(text(parts))).str();
    std::string b = canonicalize(parse_vertex_symbol(text(moved))).str();
    std::string again = canonicalize(parse_vertex_symbol(a)).str();
    r.check(a == b && a == again, text(parts) + " vs " + text(moved) + ": " + a + " / " + b);
  }
  return r;
}

// Growing the window keeps every interior vertex, edge and closed face of the
// smaller build.
inline SuiteResult window_monotonicity(std::uint32_t seed, int cases = 100) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  SuiteResult r;
  std::vector<std::string> names;
  for (const auto& n : catalog_names())
    if (!lookup(n).finite) names.push_back(n);
  const auto& sets = all_index_sets();
  while (r.cases < cases) {
    PolyhedronSpec s = lookup(names[rng() % names.size()]);
    IndexSet iset = sets[rng() % sets.size()];
    AdmissibleSet a = admissible_set(s, iset);
    if (a.empty) continue;
    std::vector<double> params = random_params(a, rng);
    BuildOptions small, large;
    small.radius = 2.0 + u(rng);
    large.radius = small.radius + 0.25 + u(rng);
    std::string what = s.name + " I=" + iset.str();
    try {
      Wythoffian ws = build(s, iset, params, small);
      Wythoffian wl = build(s, iset, params, large);
      PointIndex index;
      for (const Vec3& p : wl.vertices) index.insert(p);
      auto id = [&](int v) { return index.find(ws.vertices[v]); };
      bool ok = true;
      std::vector<std::pair<int, int>> large_edges;
      for (const Edge& e : wl.edges) large_edges.emplace_back(e.a, e.b);
      std::sort(large_edges.begin(), large_edges.end());
      for (int v : ws.interior_vertices()) ok = ok && id(v) >= 0;
      for (const Edge& e : ws.edges) {
        int x = id(e.a), y = id(e.b);
        if (x < 0 || y < 0) {
          ok = false;
          continue;
        }
        ok = ok && std::binary_search(large_edges.begin(), large_edges.end(),
                                      std::make_pair(std::min(x, y), std::max(x, y)));
      }
      std::vector<std::vector<int>> large_faces;
      for (const FaceRecord& f : wl.faces) {
        if (!f.closed) continue;
        std::vector<int> c = f.cycle;
        std::sort(c.begin(), c.end());
        large_faces.push_back(c);
      }
      std::sort(large_faces.begin(), large_faces.end());
      for (const FaceRecord& f : ws.faces) {
        if (!f.closed) continue;
        std::vector<int> c;
        for (int v : f.cycle) c.push_back(id(v));
        std::sort(c.begin(), c.end());
        ok = ok && std::binary_search(large_faces.begin(), large_faces.end(), c);
      }
      ok = ok && wl.vertices.size() >= ws.vertices.size();
      r.check(ok, what);
    } catch (const Error& e) {
      r.check(false, what + ": " + e.what());
    }
  }
  return r;
}

}  // namespace props
