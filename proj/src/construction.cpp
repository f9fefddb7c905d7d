#include "wythoff/construction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "polytope.hpp"
#include "wythoff/errors.hpp"

namespace wythoff {

std::vector<FaceType> index_pairs(IndexSet iset) {
  std::vector<FaceType> out;
  if (iset.contains(0) || iset.contains(1)) out.push_back({0, 1});
  if (iset.contains(1) || iset.contains(2)) out.push_back({1, 2});
  // r0 r2 has order two, so {0,2} only spans a polygon when both move v
  if (iset.contains(0) && iset.contains(2)) out.push_back({0, 2});
  return out;
}

std::string to_string(const FaceType& t) {
  return std::to_string(t[0]) + std::to_string(t[1]);
}

// AdmissibleSet

Vec3 AdmissibleSet::point(const std::vector<double>& params) const {
  Vec3 p = origin;
  for (std::size_t k = 0; k < basis.size() && k < params.size(); ++k) p += basis[k] * params[k];
  return p;
}

std::vector<double> AdmissibleSet::params_of(const Vec3& p) const {
  std::vector<double> u;
  for (const Vec3& b : basis) u.push_back(dot(b, p - origin));
  return u;
}

double AdmissibleSet::slack(const std::vector<double>& params) const {
  double best = 1e300;
  for (const auto& [a, b] : bounds) {
    double s = b;
    for (std::size_t k = 0; k < a.size() && k < params.size(); ++k) s -= a[k] * params[k];
    best = std::min(best, s);
  }
  return best;
}

bool AdmissibleSet::on_excluded(const Vec3& p, double tol) const {
  return std::any_of(excluded.begin(), excluded.end(),
                     [&](const ExcludedMirror& m) { return m.mirror.contains(p, tol); });
}

namespace {

bool collapsed_face(const GeneratorSet& gens, IndexSet iset, const Vec3& v) {
  for (const BaseFace& f : base_faces(gens, iset, v, 4)) {
    if (f.closed || f.points.size() < 3) continue;
    Vec3 d = normalized(f.points.back() - f.points.front());
    double edge = distance(f.points[0], f.points[1]);
    bool on_line = std::all_of(f.points.begin(), f.points.end(), [&](const Vec3& p) {
      Vec3 r = p - f.points.front();
      return norm(r - d * dot(r, d)) < 1e-7 * edge;
    });
    if (on_line) return true;
  }
  return false;
}

}  // namespace

AdmissibleSet admissible_set(const PolyhedronSpec& spec, IndexSet iset) {
  if (iset.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be non-empty");
  AdmissibleSet a;
  a.iset = iset;

  AffineSubspace hull = AffineSubspace::whole_space();
  for (int i = 0; i < 3; ++i) {
    if (iset.contains(i)) continue;
    std::optional<AffineSubspace> next = intersect(hull, mirror(spec.gens[i]));
    if (!next) {
      a.reason = "the mirrors of the generators outside I have no common point";
      return a;
    }
    hull = *next;
  }
  a.affine_hull = hull;

  for (int i : iset.members())
    a.excluded.push_back({"r" + std::to_string(i), mirror(spec.gens[i])});
  for (const Exclusion& e : spec.exclusions)
    if (e.applies(iset)) a.excluded.push_back({e.label, mirror(e.reflection)});

  a.region = detail::intersect_with_subspace(spec.domain, hull);
  if (a.region.empty()) {
    a.reason = "the common mirror misses the placement domain";
    return a;
  }
  std::sort(a.region.begin(), a.region.end(), canonical_less);
  for (const ExcludedMirror& m : a.excluded) {
    bool all_on = std::all_of(a.region.begin(), a.region.end(),
                              [&](const Vec3& p) { return m.mirror.contains(p); });
    if (all_on) {
      a.reason = "every candidate point lies on the mirror of " + m.label;
      return a;
    }
  }

  detail::Frame f = detail::frame_of(a.region, spec.domain.front());
  a.origin = f.origin;
  a.basis = f.basis;
  std::vector<std::vector<double>> local;
  for (const Vec3& p : a.region) local.push_back(f.local(p));
  a.bounds = detail::hrep_of(local, f.dim());

  // Candidates: the vertex average first, then fixed pseudo-random interior points.
  std::vector<Vec3> candidates;
  Vec3 centroid;
  for (const Vec3& p : a.region) centroid += p;
  candidates.push_back(centroid / static_cast<double>(a.region.size()));
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int k = 0; k < 24 && a.region.size() > 1; ++k) {
    Vec3 p;
    double total = 0;
    for (const Vec3& q : a.region) {
      double w = unit(rng);
      p += q * w;
      total += w;
    }
    candidates.push_back(p / total);
  }
  // Prefer points where no open face collapses onto a line; the centroid often
  // sits on a glide axis. Fall back to the first valid point when all collapse.
  std::optional<Vec3> fallback;
  for (const Vec3& p : candidates) {
    if (a.on_excluded(p)) continue;
    if (!stabilizer_check(p, spec.gens, iset)) continue;
    if (!fallback) fallback = p;
    if (collapsed_face(spec.gens, iset, p)) continue;
    fallback = p;
    break;
  }
  if (fallback) {
    a.defaults = a.params_of(*fallback);
    a.empty = false;
    return a;
  }
  a.reason = "every candidate point has a larger stabilizer than the generators outside I";
  return a;
}

// Dirichlet region

bool FundamentalRegion::contains(const Vec3& p, double tol) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(),
                     [&](const Halfspace& h) { return dot(h.normal, p) <= h.offset + tol; });
}

FundamentalRegion fundamental_region(const GeneratorSet& gens, const Vec3& seed, double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  EnumerateOptions opt;
  opt.probe = seed;
  opt.margin = 0;
  opt.max_word = 4000;
  GroupElements els = enumerate_elements(gens, Window{seed, 2 * std::sqrt(3.0) * radius}, opt);

  struct Cut {
    double dist;
    Vec3 image;
  };
  std::vector<Cut> cuts;
  for (const Element& e : els.elements) {
    if (is_identity(e.iso)) continue;
    Vec3 q = e.iso(seed);
    double d = distance(q, seed);
    if (d <= kEpsPoint)
      throw Error(ErrorCode::SeedOnMirror, "seed is fixed by the element r" + e.word);
    cuts.push_back({d, q});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.dist < b.dist; });

  detail::Polyhedron poly = detail::Polyhedron::box(seed, radius);
  std::vector<Halfspace> planes;
  for (const Cut& c : cuts) {
    Vec3 n = normalized(c.image - seed);
    double off = dot(n, (c.image + seed) * 0.5);
    planes.push_back({n, off});
    poly.clip(n, off, static_cast<int>(planes.size()) - 1);
  }

  FundamentalRegion fr;
  fr.seed = seed;
  std::set<int> used;
  for (std::size_t f = 0; f < poly.faces.size(); ++f) {
    int label = poly.labels[f];
    if (label < 0) {
      fr.box_facets.push_back(poly.faces[f]);
    } else {
      fr.facets.push_back(poly.faces[f]);
      used.insert(label);
    }
  }
  for (int label : used) fr.halfspaces.push_back(planes[label]);
  return fr;
}

// Placement

namespace {

Vec3 domain_seed(const PolyhedronSpec& spec) {
  Vec3 c;
  for (const Vec3& p : spec.domain) c += p;
  return c / static_cast<double>(spec.domain.size());
}

// Every orbit point of the seed is at least as far from v as the seed itself.
bool in_dirichlet_closure(const GeneratorSet& gens, const Vec3& seed, const Vec3& v) {
  double d0 = distance(v, seed);
  EnumerateOptions opt;
  opt.probe = seed;
  opt.margin = 1e-6;
  opt.max_word = 4000;
  opt.element_cap = 100000;
  GroupElements els = enumerate_elements(gens, Window{seed, 2 * d0}, opt);
  for (const Element& e : els.elements) {
    Vec3 q = e.iso(seed);
    if (distance(q, seed) <= kEpsPoint) continue;
    if (distance(v, q) < d0 - 1e-9) return false;
  }
  return true;
}

}  // namespace

Vec3 place_vertex(const PolyhedronSpec& spec, IndexSet iset, const std::vector<double>& params) {
  AdmissibleSet a = admissible_set(spec, iset);
  if (a.empty)
    throw Error(ErrorCode::NoAdmissibleVertex,
                "no admissible initial vertex for " + spec.name + " with I = {" + iset.str() +
                    "}: " + a.reason + " (not realizable)");
  std::vector<double> u = params.empty() ? a.defaults : params;
  if (static_cast<int>(u.size()) != a.dimension())
    throw Error(ErrorCode::PlacementViolation,
                "expected " + std::to_string(a.dimension()) + " parameters, got " +
                    std::to_string(u.size()));
  for (double x : u)
    if (!std::isfinite(x)) throw Error(ErrorCode::PlacementViolation, "non-finite parameter");
  if (a.slack(u) < -1e-9)
    throw Error(ErrorCode::PlacementViolation, "parameters lie outside the placement domain");
  Vec3 v = a.point(u);
  for (const ExcludedMirror& m : a.excluded)
    if (m.mirror.contains(v))
      throw Error(ErrorCode::PlacementViolation, "initial vertex lies on the mirror of " + m.label);
  if (!stabilizer_check(v, spec.gens, iset))
    throw Error(ErrorCode::PlacementViolation,
                "stabilizer of the initial vertex is not generated by the r_i outside I");
  if (!in_dirichlet_closure(spec.gens, domain_seed(spec), v))
    throw Error(ErrorCode::PlacementViolation, "initial vertex leaves the fundamental region");
  return v;
}

// Faces

namespace {

// Vertices reached by alternating first, second, first, ... from v; stops on
// returning to v (closed) or after `limit` letters.
std::vector<Vec3> half_walk(const GeneratorSet& gens, int first, int second, const Vec3& v,
                            int limit, double reach, bool& closed) {
  std::vector<Vec3> pts;
  Isometry w;
  Vec3 last = v;
  int far_run = 0;
  for (int k = 0; k < limit; ++k) {
    w = compose(w, gens[k % 2 == 0 ? first : second]);
    Vec3 p = w(v);
    if (near(p, last)) continue;
    if (near(p, v)) {
      closed = true;
      return pts;
    }
    pts.push_back(p);
    last = p;
    if (reach > 0) {
      far_run = distance(p, v) > reach ? far_run + 1 : 0;
      if (far_run >= 6) break;
    }
  }
  return pts;
}

// Either the full cycle (closed) or a path through v extending in both directions.
BaseFace walk_face(const GeneratorSet& gens, FaceType t, const Vec3& v, int steps, double reach) {
  BaseFace f;
  f.ftype = t;
  int period = order(compose(gens[t[0]], gens[t[1]]), 64);
  if (period > 0) {
    bool closed = false;
    f.points = {v};
    std::vector<Vec3> rest = half_walk(gens, t[0], t[1], v, 2 * period + 2, 0, closed);
    f.points.insert(f.points.end(), rest.begin(), rest.end());
    f.closed = true;
    return f;
  }
  bool dummy = false;
  int limit = reach > 0 ? 200000 : 2 * steps;
  std::vector<Vec3> fwd = half_walk(gens, t[0], t[1], v, limit, reach, dummy);
  std::vector<Vec3> bwd = half_walk(gens, t[1], t[0], v, limit, reach, dummy);
  if (reach <= 0) {
    if (static_cast<int>(fwd.size()) > steps) fwd.resize(steps);
    if (static_cast<int>(bwd.size()) > steps) bwd.resize(steps);
  }
  f.points.assign(bwd.rbegin(), bwd.rend());
  f.points.push_back(v);
  f.points.insert(f.points.end(), fwd.begin(), fwd.end());
  f.closed = false;
  return f;
}

double diameter(const std::vector<Vec3>& pts) {
  double d = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

std::vector<int> canonical_cycle(std::vector<int> ids, bool closed) {
  if (!closed) {
    std::vector<int> rev(ids.rbegin(), ids.rend());
    return std::min(ids, rev);
  }
  std::vector<int> best;
  std::size_t n = ids.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = ids[(s + k) % n];
      if (best.empty() || c < best) best = c;
    }
    std::reverse(ids.begin(), ids.end());
  }
  return best;
}

}  // namespace

std::vector<BaseFace> base_faces(const GeneratorSet& gens, IndexSet iset, const Vec3& v,
                                 int steps) {
  std::vector<BaseFace> out;
  for (const FaceType& t : index_pairs(iset)) out.push_back(walk_face(gens, t, v, steps, 0));
  return out;
}

// Wythoffian

bool Wythoffian::is_interior(int id) const {
  return distance(vertices[id], window.center) < window.radius - interior_margin - 1e-9;
}

std::vector<int> Wythoffian::interior_vertices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (is_interior(i)) out.push_back(i);
  return out;
}

Wythoffian build(const PolyhedronSpec& spec, IndexSet iset, const std::vector<double>& params,
                 const BuildOptions& options) {
  AdmissibleSet a = admissible_set(spec, iset);
  Vec3 v = place_vertex(spec, iset, params);
  Wythoffian w = build_at(spec, iset, v, options);
  w.params = params.empty() ? a.defaults : params;
  return w;
}

Wythoffian build_at(const PolyhedronSpec& spec, IndexSet iset, const Vec3& v,
                    const BuildOptions& options) {
  if (iset.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be non-empty");
  if (!(options.radius > 0)) throw Error(ErrorCode::InvalidArgument, "window radius must be positive");
  const GeneratorSet& gens = spec.gens;
  double longest = 0;
  for (int i = 0; i < 3; ++i) {
    double d = distance(gens[i](v), v);
    if ((d > kEpsPoint) != iset.contains(i))
      throw Error(ErrorCode::PlacementViolation,
                  "initial vertex is " + std::string(iset.contains(i) ? "" : "not ") +
                      "fixed by r" + std::to_string(i));
    if (iset.contains(i)) longest = std::max(longest, d);
  }

  Wythoffian w;
  w.source = spec;
  w.iset = iset;
  w.initial_vertex = v;
  w.window = Window{options.center.value_or(v), options.radius};
  const Vec3 c = w.window.center;
  const double R = options.radius;

  std::vector<BaseFace> faces;
  double face_diam = 0;
  for (const FaceType& t : index_pairs(iset)) {
    int period = order(compose(gens[t[0]], gens[t[1]]), 64);
    BaseFace f = walk_face(gens, t, v, 0, period > 0 ? 0 : 2 * R + 2 * longest);
    if (f.closed) face_diam = std::max(face_diam, diameter(f.points));
    faces.push_back(std::move(f));
  }
  w.interior_margin = std::max(longest, face_diam);

  EnumerateOptions opt;
  opt.probe = v;
  opt.margin = face_diam + 2 * longest;
  opt.max_word = options.max_word;
  opt.element_cap = options.element_cap;
  GroupElements els = enumerate_elements(gens, w.window, opt);

  auto kept = [&](const Vec3& p) { return distance(p, c) <= R + 1e-9; };
  PointIndex index;
  std::vector<const Isometry*> active;
  for (const Element& e : els.elements) {
    Vec3 q = e.iso(v);
    if (!kept(q)) continue;
    index.insert(q);
    active.push_back(&e.iso);
  }
  auto id_of = [&](const Vec3& p) {
    if (!kept(p)) return -1;
    return index.insert(p);
  };

  std::map<std::pair<int, int>, int> edge_types;
  std::set<std::vector<int>> face_keys;
  std::vector<FaceRecord> records;
  for (const Isometry* g : active) {
    int a = id_of((*g)(v));
    for (int i : iset.members()) {
      int b = id_of((*g)(gens[i](v)));
      if (b < 0) continue;
      edge_types.emplace(std::minmax(a, b), i);
    }
    for (const BaseFace& f : faces) {
      std::vector<int> ids;
      ids.reserve(f.points.size());
      for (const Vec3& p : f.points) ids.push_back(id_of((*g)(p)));
      if (f.closed) {
        if (std::find(ids.begin(), ids.end(), -1) != ids.end()) continue;
        std::vector<int> key = canonical_cycle(ids, true);
        key.insert(key.begin(), {f.ftype[0], f.ftype[1], 1});
        if (face_keys.insert(key).second) records.push_back({f.ftype, ids, true});
        continue;
      }
      // runs of kept vertices become open faces
      std::size_t k = 0;
      while (k < ids.size()) {
        if (ids[k] < 0) {
          ++k;
          continue;
        }
        std::size_t e = k;
        while (e < ids.size() && ids[e] >= 0) ++e;
        if (e - k >= 2) {
          std::vector<int> run(ids.begin() + k, ids.begin() + e);
          std::vector<int> key = canonical_cycle(run, false);
          key.insert(key.begin(), {f.ftype[0], f.ftype[1], 0});
          if (face_keys.insert(key).second) records.push_back({f.ftype, run, false});
        }
        k = e;
      }
    }
  }

  // canonical vertex order
  const std::vector<Vec3>& pts = index.points();
  std::vector<int> order_ids(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) order_ids[i] = static_cast<int>(i);
  std::sort(order_ids.begin(), order_ids.end(),
            [&](int x, int y) { return canonical_less(pts[x], pts[y]); });
  std::vector<int> remap(pts.size());
  for (std::size_t k = 0; k < order_ids.size(); ++k) {
    remap[order_ids[k]] = static_cast<int>(k);
    w.vertices.push_back(pts[order_ids[k]]);
  }
  for (const auto& [ab, type] : edge_types) {
    int x = remap[ab.first], y = remap[ab.second];
    w.edges.push_back({std::min(x, y), std::max(x, y), type});
  }
  std::sort(w.edges.begin(), w.edges.end(), [](const Edge& p, const Edge& q) {
    return std::tie(p.a, p.b) < std::tie(q.a, q.b);
  });
  for (FaceRecord& f : records) {
    for (int& id : f.cycle) id = remap[id];
    w.faces.push_back(std::move(f));
  }
  int vid = index.find(v);
  w.initial_id = vid >= 0 ? remap[vid] : -1;

  if (options.validate) {
    ValidationReport rep = validate(w);
    if (!rep.ok()) {
      std::string msg = "Wythoffian of " + spec.name + " with I = {" + iset.str() + "} is invalid:";
      for (std::size_t k = 0; k < rep.problems.size() && k < 5; ++k) msg += " " + rep.problems[k] + ";";
      throw Error(ErrorCode::ValidationFailed, msg);
    }
  }
  return w;
}

// Validation

ValidationReport validate(const Wythoffian& w) {
  ValidationReport rep;
  int n = static_cast<int>(w.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : w.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<int> interior = w.interior_vertices();

  // Connectivity. A component that reaches the boundary zone may join the
  // rest outside the window; only a component trapped inside the interior,
  // apart from the initial vertex's own, is a real disconnection.
  if (w.initial_id >= 0) {
    std::vector<int> comp(n, -1);
    int trapped = 0;
    for (int s0 = 0; s0 < n; ++s0) {
      if (comp[s0] >= 0) continue;
      std::vector<int> members{s0};
      comp[s0] = s0;
      for (std::size_t k = 0; k < members.size(); ++k)
        for (int x : adj[members[k]])
          if (comp[x] < 0) {
            comp[x] = s0;
            members.push_back(x);
          }
      bool reaches_boundary = std::any_of(members.begin(), members.end(),
                                          [&](int u) { return !w.is_interior(u); });
      if (!reaches_boundary && comp[w.initial_id] != s0) trapped += static_cast<int>(members.size());
    }
    bool initial_escapes = false;
    for (int u = 0; u < n; ++u)
      if (comp[u] == comp[w.initial_id] && !w.is_interior(u)) initial_escapes = true;
    if (!initial_escapes) {
      // the initial component is complete, so every other interior vertex is cut off
      trapped = 0;
      for (int u : interior) trapped += comp[u] != comp[w.initial_id];
    }
    if (trapped)
      rep.problems.push_back(std::to_string(trapped) + " interior vertices are disconnected");
  } else if (n > 0) {
    rep.problems.push_back("initial vertex is missing");
  }

  // face incidences around vertices and along edges
  std::vector<std::vector<std::pair<int, int>>> around(n);
  std::map<std::pair<int, int>, int> edge_faces;
  for (const FaceRecord& f : w.faces) {
    std::size_t m = f.cycle.size();
    std::size_t count = f.closed ? m : m - 1;
    for (std::size_t k = 0; k < count; ++k) {
      int a = f.cycle[k], b = f.cycle[(k + 1) % m];
      ++edge_faces[std::minmax(a, b)];
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (!f.closed && (k == 0 || k + 1 == m)) continue;
      int prev = f.cycle[(k + m - 1) % m], next = f.cycle[(k + 1) % m];
      around[f.cycle[k]].emplace_back(prev, next);
    }
  }
  int bad_edges = 0;
  for (const Edge& e : w.edges) {
    if (!w.is_interior(e.a) || !w.is_interior(e.b)) continue;
    auto it = edge_faces.find({e.a, e.b});
    if (it == edge_faces.end() || it->second != 2) ++bad_edges;
  }
  for (const auto& [ab, cnt] : edge_faces) {
    bool has_edge = std::find(adj[ab.first].begin(), adj[ab.first].end(), ab.second) !=
                    adj[ab.first].end();
    if (!has_edge) ++bad_edges;
  }
  if (bad_edges)
    rep.problems.push_back(std::to_string(bad_edges) + " edges do not lie in exactly two faces");

  int bad_figures = 0;
  for (int u : interior) {
    const auto& pairs = around[u];
    std::map<int, std::vector<int>> link;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      link[pairs[k].first].push_back(static_cast<int>(k));
      link[pairs[k].second].push_back(static_cast<int>(k));
    }
    bool ok = !pairs.empty() && link.size() == adj[u].size();
    for (const auto& [nb, fs] : link) ok = ok && fs.size() == 2;
    if (ok) {
      // walk the cycle of faces
      std::size_t steps = 0;
      int face = 0, at = pairs[0].second;
      std::vector<char> used(pairs.size(), 0);
      while (!used[face]) {
        used[face] = 1;
        ++steps;
        const std::vector<int>& fs = link[at];
        int nf = fs[0] == face ? fs[1] : fs[0];
        at = pairs[nf].first == at ? pairs[nf].second : pairs[nf].first;
        face = nf;
      }
      ok = steps == pairs.size();
    }
    if (!ok) ++bad_figures;
  }
  if (bad_figures)
    rep.problems.push_back(std::to_string(bad_figures) +
                           " interior vertex figures are not a single cycle");

  PointIndex coarse(100 * kEpsPoint);
  for (const Vec3& p : w.vertices) coarse.insert(p);
  if (coarse.size() != w.vertices.size())
    rep.problems.push_back("distinct vertices closer than " + std::to_string(100 * kEpsPoint));
  return rep;
}

}  // namespace wythoff
