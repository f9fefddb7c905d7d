#include "wythoff/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <regex>

#include "wythoff/errors.hpp"

namespace wythoff {

const char* to_string(FaceShape shape) {
  switch (shape) {
    case FaceShape::ConvexPlanar: return "ConvexPlanar";
    case FaceShape::ConcavePlanar: return "ConcavePlanar";
    case FaceShape::StarPlanar: return "StarPlanar";
    case FaceShape::CrossedPlanar: return "CrossedPlanar";
    case FaceShape::SkewFinite: return "SkewFinite";
    case FaceShape::LinearApeirogon: return "LinearApeirogon";
    case FaceShape::Zigzag: return "Zigzag";
    case FaceShape::TruncatedZigzag: return "TruncatedZigzag";
    case FaceShape::Helical: return "Helical";
    case FaceShape::HelicalTruncated: return "HelicalTruncated";
  }
  return "?";
}

std::string FaceClass::symbol() const {
  std::string n = std::to_string(size);
  switch (shape) {
    case FaceShape::ConvexPlanar: return n + "c";
    case FaceShape::ConcavePlanar: return n;
    case FaceShape::StarPlanar: return n + "st";
    case FaceShape::CrossedPlanar: return n + "bx";
    case FaceShape::SkewFinite: return n + "s";
    case FaceShape::LinearApeirogon: return "inf";
    case FaceShape::Zigzag: return "inf_2";
    case FaceShape::TruncatedZigzag: return "tinf_2";
    case FaceShape::Helical: return "inf_" + std::to_string(helix_k);
    case FaceShape::HelicalTruncated: return "inf_" + std::to_string(2 * helix_k);
  }
  return n;
}

// Local invariants

LocalInvariants local_invariants(const std::vector<Vec3>& pts, bool closed) {
  LocalInvariants li;
  int m = static_cast<int>(pts.size());
  int ne = closed ? m : m - 1;
  std::vector<Vec3> e(std::max(ne, 0));
  for (int k = 0; k < ne; ++k) {
    e[k] = pts[(k + 1) % m] - pts[k];
    li.lengths.push_back(norm(e[k]));
  }
  // vertex k sits between edges k-1 and k
  int first = closed ? 0 : 1, last = closed ? m - 1 : m - 2;
  std::vector<Vec3> binormal(m);
  std::vector<char> has_binormal(m, 0);
  for (int k = first; k <= last; ++k) {
    const Vec3& in = e[(k - 1 + ne) % ne];
    const Vec3& out = e[k % ne];
    Vec3 b = cross(in, out);
    li.angles.push_back(std::atan2(norm(b), -dot(in, out)));
    if (norm(b) > 1e-12 * norm(in) * norm(out)) {
      binormal[k] = normalized(b);
      has_binormal[k] = 1;
    }
  }
  for (int k = first; k <= last; ++k) {
    int next = (k + 1) % m;
    if (!closed && next > last) break;
    if (!has_binormal[k] || !has_binormal[next]) {
      li.torsions.push_back(std::nan(""));
      continue;
    }
    Vec3 t = normalized(e[k % ne]);
    li.torsions.push_back(
        std::atan2(dot(cross(binormal[k], binormal[next]), t), dot(binormal[k], binormal[next])));
  }
  return li;
}

namespace {

double spread(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *hi - *lo;
}

double mean(const std::vector<double>& xs) {
  return xs.empty() ? 0 : std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
}

}  // namespace

bool is_regular_polygon(const std::vector<Vec3>& pts, bool closed, double tol) {
  if (pts.size() < 3) return false;
  LocalInvariants li = local_invariants(pts, closed);
  double len = mean(li.lengths);
  if (!(len > 0) || spread(li.lengths) > tol * len) return false;
  double atol = std::max(tol * kPi, 1e-12);
  if (spread(li.angles) > atol) return false;
  bool straight = std::all_of(li.angles.begin(), li.angles.end(),
                              [&](double a) { return a > kPi - atol; });
  if (straight) return !closed;
  std::vector<double> mags;
  std::vector<int> signs;
  for (std::size_t k = 0; k < li.torsions.size(); ++k) {
    double t = li.torsions[k];
    if (std::isnan(t)) return false;
    mags.push_back(std::abs(t));
    // 0 and pi carry no handedness
    if (std::abs(t) > atol && std::abs(t) < kPi - atol) signs.push_back(t > 0 ? 1 : -1);
    else signs.push_back(0);
  }
  if (spread(mags) > atol) return false;
  bool constant = true, alternating = true;
  int ref_c = 0, ref_a = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == 0) continue;
    int alt = (k % 2 == 0) ? signs[k] : -signs[k];
    if (ref_c == 0) ref_c = signs[k];
    if (ref_a == 0) ref_a = alt;
    constant = constant && signs[k] == ref_c;
    alternating = alternating && alt == ref_a;
  }
  // an odd closed polygon cannot alternate around the whole cycle
  if (closed && pts.size() % 2 == 1) alternating = false;
  return constant || alternating;
}

namespace {

double procrustes_residual(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  Vec3 ca, cb;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ca += a[k];
    cb += b[k];
  }
  ca = ca / static_cast<double>(a.size());
  cb = cb / static_cast<double>(b.size());
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (std::size_t k = 0; k < a.size(); ++k) {
    Vec3 x = a[k] - ca, y = b[k] - cb;
    h += Eigen::Vector3d(y.x, y.y, y.z) * Eigen::Vector3d(x.x, x.y, x.z).transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d l = svd.matrixU() * svd.matrixV().transpose();
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Vec3 x = a[k] - ca;
    Eigen::Vector3d y = l * Eigen::Vector3d(x.x, x.y, x.z);
    worst = std::max(worst, distance(Vec3{y(0), y(1), y(2)} + cb, b[k]));
  }
  return worst;
}

}  // namespace

bool has_regular_symmetry(const std::vector<Vec3>& pts, double tol) {
  std::size_t m = pts.size();
  if (m < 3) return false;
  double scale = 0;
  for (std::size_t k = 0; k < m; ++k) scale = std::max(scale, distance(pts[k], pts[(k + 1) % m]));
  std::vector<Vec3> shifted(m), mirrored(m);
  for (std::size_t k = 0; k < m; ++k) {
    shifted[k] = pts[(k + 1) % m];
    mirrored[k] = pts[(m - k) % m];
  }
  return procrustes_residual(pts, shifted) <= tol * scale &&
         procrustes_residual(pts, mirrored) <= tol * scale;
}

// Classification

namespace {

struct PlaneFit {
  Vec3 centre, normal;
  double residual = 0;
};

PlaneFit fit_plane(const std::vector<Vec3>& pts) {
  PlaneFit f;
  for (const Vec3& p : pts) f.centre += p;
  f.centre = f.centre / static_cast<double>(pts.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const Vec3& p : pts) {
    Vec3 d = p - f.centre;
    Eigen::Vector3d x(d.x, d.y, d.z);
    cov += x * x.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  Eigen::Vector3d n = es.eigenvectors().col(0);
  f.normal = {n(0), n(1), n(2)};
  for (const Vec3& p : pts) f.residual = std::max(f.residual, std::abs(dot(f.normal, p - f.centre)));
  return f;
}

double line_residual(const std::vector<Vec3>& pts) {
  Vec3 c;
  for (const Vec3& p : pts) c += p;
  c = c / static_cast<double>(pts.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const Vec3& p : pts) {
    Vec3 d = p - c;
    Eigen::Vector3d x(d.x, d.y, d.z);
    cov += x * x.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  Eigen::Vector3d a = es.eigenvectors().col(2);
  Vec3 dir{a(0), a(1), a(2)};
  double worst = 0;
  for (const Vec3& p : pts) {
    Vec3 d = p - c;
    worst = std::max(worst, norm(d - dir * dot(d, dir)));
  }
  return worst;
}

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

bool segments_cross(const std::array<double, 2>& a, const std::array<double, 2>& b,
                    const std::array<double, 2>& c, const std::array<double, 2>& d, double eps) {
  auto orient = [](const std::array<double, 2>& p, const std::array<double, 2>& q,
                   const std::array<double, 2>& r) {
    return cross2(q[0] - p[0], q[1] - p[1], r[0] - p[0], r[1] - p[1]);
  };
  double o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
         ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps));
}

FaceShape planar_shape(const std::vector<Vec3>& pts, const PlaneFit& fit, double scale) {
  Vec3 u = normalized(pts[0] - fit.centre);
  Vec3 v = cross(fit.normal, u);
  std::vector<std::array<double, 2>> q;
  for (const Vec3& p : pts) q.push_back({dot(p - fit.centre, u), dot(p - fit.centre, v)});
  std::size_t m = q.size();
  double eps = 1e-12 * scale * scale;
  bool simple = true;
  for (std::size_t i = 0; i < m && simple; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (segments_cross(q[i], q[(i + 1) % m], q[j], q[(j + 1) % m], eps)) {
        simple = false;
        break;
      }
    }
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = q[k];
    const auto& b = q[(k + 1) % m];
    const auto& c = q[(k + 2) % m];
    double t = cross2(b[0] - a[0], b[1] - a[1], c[0] - b[0], c[1] - b[1]);
    if (t > eps) ++pos;
    if (t < -eps) ++neg;
  }
  bool one_way = pos == 0 || neg == 0;
  if (simple) return one_way ? FaceShape::ConvexPlanar : FaceShape::ConcavePlanar;
  return one_way ? FaceShape::StarPlanar : FaceShape::CrossedPlanar;
}

}  // namespace

FaceClass classify_points(const std::vector<Vec3>& pts, bool closed, const GeneratorSet& gens,
                          FaceType ftype, IndexSet iset) {
  FaceClass fc;
  if (closed && pts.size() < 3)
    throw Error(ErrorCode::TooFewVertices, "closed face with fewer than three vertices");
  if (!closed && pts.size() < 4)
    throw Error(ErrorCode::TooFewVertices, "apeirogon clipped to fewer than four vertices");
  fc.regular = is_regular_polygon(pts, closed);
  LocalInvariants li = local_invariants(pts, closed);
  double scale = mean(li.lengths);
  double eps_geo = 1e-7 * scale;
  if (closed) {
    fc.size = static_cast<int>(pts.size());
    PlaneFit fit = fit_plane(pts);
    fc.shape = fit.residual < eps_geo ? planar_shape(pts, fit, scale) : FaceShape::SkewFinite;
    if (fc.shape == FaceShape::CrossedPlanar) fc.regular = false;
    return fc;
  }
  fc.size = 0;
  if (line_residual(pts) < eps_geo) {
    fc.shape = FaceShape::LinearApeirogon;
    return fc;
  }
  bool truncated = iset.contains(ftype[0]) && iset.contains(ftype[1]);
  IsometryKind k = classify(compose(gens[ftype[0]], gens[ftype[1]]));
  int turns = 2;
  if (k.tag == IsometryTag::Screw || k.tag == IsometryTag::Rotation ||
      k.tag == IsometryTag::HalfTurn)
    turns = static_cast<int>(std::lround(2 * kPi / k.angle));
  if (turns <= 2) {
    fc.shape = truncated ? FaceShape::TruncatedZigzag : FaceShape::Zigzag;
    fc.helix_k = 2;
  } else {
    fc.shape = truncated ? FaceShape::HelicalTruncated : FaceShape::Helical;
    fc.helix_k = turns;
  }
  return fc;
}

FaceClass classify_face(const FaceRecord& face, const Wythoffian& w) {
  std::vector<Vec3> pts;
  for (int id : face.cycle) pts.push_back(w.vertices.at(id));
  return classify_points(pts, face.closed, w.source.gens, face.ftype, w.iset);
}

// Vertex symbols

std::string SymbolEntry::str() const { return infinite ? tag : std::to_string(size) + tag; }

namespace {

// Order: finite before infinite, then by size, then by tag.
bool entry_less(const SymbolEntry& a, const SymbolEntry& b) {
  return std::tie(a.infinite, a.size, a.tag) < std::tie(b.infinite, b.size, b.tag);
}

bool seq_less(const std::vector<SymbolEntry>& a, const std::vector<SymbolEntry>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), entry_less);
}

std::vector<std::vector<SymbolEntry>> dihedral_images(const std::vector<SymbolEntry>& s) {
  std::vector<std::vector<SymbolEntry>> out;
  std::size_t n = s.size();
  std::vector<SymbolEntry> r(s.rbegin(), s.rend());
  for (const std::vector<SymbolEntry>* base : {&s, static_cast<const std::vector<SymbolEntry>*>(&r)})
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<SymbolEntry> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = (*base)[(k + i) % n];
      out.push_back(std::move(c));
    }
  return out;
}

SymbolEntry parse_entry(std::string_view t) {
  static const std::regex finite(R"(([0-9]+)(c|s|st|bx)?)");
  static const std::regex open(R"(t?inf(_[0-9]+)?)");
  std::string text(t);
  SymbolEntry e;
  if (std::regex_match(text, open)) {
    e.infinite = true;
    e.tag = text;
    return e;
  }
  std::smatch m;
  if (!std::regex_match(text, m, finite) || m[1].length() > 6)
    throw Error(ErrorCode::InvalidArgument, "bad symbol entry '" + text + "'");
  e.size = std::stoi(m[1].str());
  e.tag = m[2].str();
  return e;
}

}  // namespace

VertexSymbol parse_vertex_symbol(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') s += c;
  VertexSymbol out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t dot_pos = s.find('.', start);
    std::string item = s.substr(start, dot_pos == std::string::npos ? std::string::npos
                                                                     : dot_pos - start);
    if (item.empty()) throw Error(ErrorCode::InvalidArgument, "bad vertex symbol");
    int reps = 1;
    std::size_t caret = item.find('^');
    if (caret != std::string::npos) {
      std::string digits = item.substr(caret + 1);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), reps);
      if (ec != std::errc() || end != digits.data() + digits.size() || reps < 1 || reps > 64)
        throw Error(ErrorCode::InvalidArgument, "bad repeat count in vertex symbol");
      item = item.substr(0, caret);
    }
    SymbolEntry e = parse_entry(item);
    for (int r = 0; r < reps; ++r) out.entries.push_back(e);
    if (dot_pos == std::string::npos) break;
    start = dot_pos + 1;
  }
  return out;
}

VertexSymbol canonicalize(const VertexSymbol& s) {
  if (s.entries.empty()) return s;
  std::vector<std::vector<SymbolEntry>> imgs = dihedral_images(s.entries);
  VertexSymbol out;
  out.entries = *std::min_element(imgs.begin(), imgs.end(), seq_less);
  return out;
}

std::string VertexSymbol::str() const {
  VertexSymbol c = canonicalize(*this);
  std::string out = "(";
  std::size_t k = 0;
  bool first = true;
  while (k < c.entries.size()) {
    std::size_t run = 1;
    while (k + run < c.entries.size() && c.entries[k + run] == c.entries[k]) ++run;
    if (!first) out += ".";
    out += c.entries[k].str();
    if (run > 1) out += "^" + std::to_string(run);
    first = false;
    k += run;
  }
  return out + ")";
}

bool symbol_matches(const VertexSymbol& computed, const VertexSymbol& expected) {
  if (computed.entries.size() != expected.entries.size()) return false;
  auto ok = [](const SymbolEntry& c, const SymbolEntry& e) {
    if (c.infinite != e.infinite) return false;
    if (c.infinite) return c.tag == e.tag;
    return c.size == e.size && (e.tag.empty() || c.tag == e.tag);
  };
  for (const auto& img : dihedral_images(computed.entries)) {
    bool all = true;
    for (std::size_t i = 0; i < img.size() && all; ++i) all = ok(img[i], expected.entries[i]);
    if (all) return true;
  }
  return false;
}

namespace {

struct Incidence {
  // per vertex: (face, previous, next)
  std::vector<std::vector<std::array<int, 3>>> around;
};

Incidence incidence(const Wythoffian& w) {
  Incidence inc;
  inc.around.resize(w.vertices.size());
  for (int f = 0; f < static_cast<int>(w.faces.size()); ++f) {
    const FaceRecord& face = w.faces[f];
    std::size_t m = face.cycle.size();
    for (std::size_t k = 0; k < m; ++k) {
      if (!face.closed && (k == 0 || k + 1 == m)) continue;
      inc.around[face.cycle[k]].push_back(
          {f, face.cycle[(k + m - 1) % m], face.cycle[(k + 1) % m]});
    }
  }
  return inc;
}

VertexFigure figure_from(const Wythoffian& w, const Incidence& inc, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(w.vertices.size()))
    throw Error(ErrorCode::InvalidArgument, "vertex id out of range");
  const auto& items = inc.around[vertex];
  auto open = [&](const std::string& why) {
    return Error(ErrorCode::OpenVertexFigure,
                 "vertex figure at " + std::to_string(vertex) + " is not a closed cycle: " + why);
  };
  if (items.size() < 2) throw open("too few faces");
  std::map<int, std::vector<int>> by_neighbor;
  for (int k = 0; k < static_cast<int>(items.size()); ++k) {
    by_neighbor[items[k][1]].push_back(k);
    by_neighbor[items[k][2]].push_back(k);
  }
  for (const auto& [nb, ks] : by_neighbor)
    if (ks.size() != 2) throw open("neighbour " + std::to_string(nb) + " borders " +
                                   std::to_string(ks.size()) + " faces");
  VertexFigure fig;
  fig.vertex = vertex;
  // start from the smallest neighbour for a deterministic order
  int at = by_neighbor.begin()->first;
  int item = by_neighbor.begin()->second[0];
  std::vector<char> used(items.size(), 0);
  while (!used[item]) {
    used[item] = 1;
    fig.neighbors.push_back(at);
    fig.faces.push_back(items[item][0]);
    at = items[item][1] == at ? items[item][2] : items[item][1];
    const std::vector<int>& ks = by_neighbor[at];
    item = ks[0] == item ? ks[1] : ks[0];
  }
  if (fig.faces.size() != items.size()) throw open("faces split into several cycles");
  for (int nb : fig.neighbors) fig.points.push_back(w.vertices[nb]);
  return fig;
}

struct ClassCache {
  std::vector<std::optional<FaceClass>> per_face;
  std::map<FaceType, FaceClass> open_by_type;

  explicit ClassCache(const Wythoffian& w) : per_face(w.faces.size()) {}

  // Clipped apeirogons may be too short to classify; every face of a type is
  // congruent to the base face, so open faces take the base face's class.
  const FaceClass& get(const Wythoffian& w, int f) {
    if (!per_face[f]) {
      const FaceRecord& face = w.faces[f];
      if (face.closed) {
        per_face[f] = classify_face(face, w);
      } else {
        if (open_by_type.empty())
          for (const BaseFace& b : base_faces(w.source.gens, w.iset, w.initial_vertex, 10))
            if (!b.closed)
              open_by_type[b.ftype] =
                  classify_points(b.points, false, w.source.gens, b.ftype, w.iset);
        auto it = open_by_type.find(face.ftype);
        if (it == open_by_type.end())
          throw Error(ErrorCode::ValidationFailed, "open face of a closed face type");
        per_face[f] = it->second;
      }
    }
    return *per_face[f];
  }
};

VertexSymbol symbol_from(const Wythoffian& w, const VertexFigure& fig, ClassCache& cache) {
  VertexSymbol s;
  for (int f : fig.faces) {
    const FaceClass& fc = cache.get(w, f);
    SymbolEntry e;
    e.infinite = fc.infinite();
    e.size = fc.size;
    std::string sym = fc.symbol();
    e.tag = fc.infinite() ? sym : sym.substr(std::to_string(fc.size).size());
    s.entries.push_back(e);
  }
  return canonicalize(s);
}

}  // namespace

VertexFigure vertex_figure(const Wythoffian& w, int vertex) {
  return figure_from(w, incidence(w), vertex);
}

VertexSymbol vertex_symbol_at(const Wythoffian& w, int vertex) {
  Incidence inc = incidence(w);
  ClassCache cache(w);
  return symbol_from(w, figure_from(w, inc, vertex), cache);
}

VertexSymbol vertex_symbol(const Wythoffian& w) {
  std::vector<int> interior = w.interior_vertices();
  if (interior.empty())
    throw Error(ErrorCode::OpenVertexFigure, "no interior vertex in the window");
  Incidence inc = incidence(w);
  ClassCache cache(w);
  std::optional<VertexSymbol> first;
  std::string first_text;
  for (int u : interior) {
    VertexSymbol s = symbol_from(w, figure_from(w, inc, u), cache);
    std::string text = s.str();
    if (!first) {
      first = s;
      first_text = text;
    } else if (text != first_text) {
      throw Error(ErrorCode::NonTransitiveSymbol,
                  "vertex symbols differ: " + first_text + " vs " + text);
    }
  }
  return *first;
}

// Uniformity

double edge_length_spread(const GeneratorSet& gens, IndexSet iset, const Vec3& v) {
  std::vector<double> ls;
  for (int i : iset.members()) ls.push_back(distance(gens[i](v), v));
  double m = mean(ls);
  return m > 0 ? spread(ls) / m : 0;
}

UniformityReport is_uniform_at(const PolyhedronSpec& spec, IndexSet iset, const Vec3& v) {
  UniformityReport rep;
  rep.edge_length_spread = edge_length_spread(spec.gens, iset, v);
  for (const BaseFace& f : base_faces(spec.gens, iset, v, 10)) {
    FaceClass fc = classify_points(f.points, f.closed, spec.gens, f.ftype, iset);
    if (!fc.regular) rep.failing_faces.push_back(f.ftype);
  }
  rep.uniform = rep.failing_faces.empty() && rep.edge_length_spread <= kRelTol;
  return rep;
}

UniformityReport is_uniform(const Wythoffian& w) {
  return is_uniform_at(w.source, w.iset, w.initial_vertex);
}

namespace {

struct SearchProblem {
  const PolyhedronSpec& spec;
  IndexSet iset;
  const AdmissibleSet& a;

  bool valid(const std::vector<double>& u) const {
    if (a.slack(u) < 1e-9) return false;
    return !a.on_excluded(a.point(u), 1e-6);
  }

  // Zero exactly when edges agree and the torsions of truncated faces match.
  std::vector<double> residual(const std::vector<double>& u) const {
    Vec3 v = a.point(u);
    std::vector<double> ls;
    for (int i : iset.members()) ls.push_back(distance(spec.gens[i](v), v));
    double m = mean(ls);
    std::vector<double> r;
    for (std::size_t k = 1; k < ls.size(); ++k) r.push_back((ls[k] - ls[0]) / m);
    for (const BaseFace& f : base_faces(spec.gens, iset, v, 6)) {
      if (!(iset.contains(f.ftype[0]) && iset.contains(f.ftype[1]))) continue;
      LocalInvariants li = local_invariants(f.points, f.closed);
      std::vector<double> even, odd;
      for (std::size_t k = 0; k < li.torsions.size(); ++k) {
        double t = li.torsions[k];
        if (std::isnan(t)) continue;
        (k % 2 == 0 ? even : odd).push_back(std::abs(t));
      }
      if (!even.empty() && !odd.empty()) r.push_back((mean(even) - mean(odd)) / kPi);
    }
    return r;
  }

  double cost(const std::vector<double>& u) const {
    std::vector<double> r = residual(u);
    return std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
  }

  bool accept(const std::vector<double>& u) const {
    if (!valid(u)) return false;
    Vec3 v = a.point(u);
    if (edge_length_spread(spec.gens, iset, v) >= 1e-10) return false;
    try {
      // a face that collapses at u raises here; such points are not uniform
      if (!is_uniform_at(spec, iset, v).uniform) return false;
      place_vertex(spec, iset, u);
    } catch (const Error&) {
      return false;
    }
    return true;
  }

  // Levenberg-Marquardt with central differences, kept inside the region.
  std::vector<double> refine(std::vector<double> u) const {
    std::size_t d = u.size();
    double lambda = 1e-3;
    double f = cost(u);
    for (int it = 0; it < 200 && f > 1e-30; ++it) {
      std::vector<double> r = residual(u);
      std::size_t n = r.size();
      Eigen::MatrixXd J(n, d);
      for (std::size_t j = 0; j < d; ++j) {
        double h = 1e-7;
        std::vector<double> up = u, dn = u;
        up[j] += h;
        dn[j] -= h;
        std::vector<double> ru = residual(up), rd = residual(dn);
        if (ru.size() != n || rd.size() != n) return u;
        for (std::size_t i = 0; i < n; ++i) J(i, j) = (ru[i] - rd[i]) / (2 * h);
      }
      Eigen::VectorXd rv(n);
      for (std::size_t i = 0; i < n; ++i) rv(i) = r[i];
      Eigen::MatrixXd JtJ = J.transpose() * J;
      Eigen::VectorXd g = J.transpose() * rv;
      bool improved = false;
      for (int tries = 0; tries < 12 && !improved; ++tries) {
        Eigen::MatrixXd M = JtJ;
        for (std::size_t j = 0; j < d; ++j) M(j, j) += lambda * (1 + JtJ(j, j));
        Eigen::VectorXd step = M.ldlt().solve(-g);
        std::vector<double> cand = u;
        for (std::size_t j = 0; j < d; ++j) cand[j] += step(j);
        if (valid(cand)) {
          double fc = cost(cand);
          if (fc < f) {
            u = cand;
            f = fc;
            lambda = std::max(lambda / 4, 1e-12);
            improved = true;
            break;
          }
        }
        lambda *= 5;
      }
      if (!improved) break;
    }
    return u;
  }
};

}  // namespace

UniformSearchResult find_uniform_vertex(const PolyhedronSpec& spec, IndexSet iset) {
  AdmissibleSet a = admissible_set(spec, iset);
  if (a.empty)
    throw Error(ErrorCode::NoAdmissibleVertex,
                "no admissible initial vertex for " + spec.name + " with I = {" + iset.str() +
                    "}: " + a.reason + " (not realizable)");
  SearchProblem sp{spec, iset, a};
  UniformSearchResult best;
  best.params = a.defaults;
  best.edge_length_spread = edge_length_spread(spec.gens, iset, a.point(a.defaults));
  auto consider = [&](const std::vector<double>& u) {
    if (!sp.valid(u)) return false;
    double s = edge_length_spread(spec.gens, iset, a.point(u));
    if (sp.accept(u)) {
      best = {true, u, s};
      return true;
    }
    if (s < best.edge_length_spread) {
      best.params = u;
      best.edge_length_spread = s;
    }
    return false;
  };

  if (consider(a.defaults)) return best;
  int d = a.dimension();
  if (d == 0) return best;
  if (consider(sp.refine(a.defaults))) return best;

  // bounding box of the region in parameter coordinates
  std::vector<double> lo(d, 1e300), hi(d, -1e300);
  for (const Vec3& p : a.region) {
    std::vector<double> u = a.params_of(p);
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], u[j]);
      hi[j] = std::max(hi[j], u[j]);
    }
  }
  const int n = d <= 2 ? 64 : 20;
  for (int depth = 0; depth < 20; ++depth) {
    std::vector<std::pair<double, std::vector<double>>> samples;
    std::vector<int> idx(d, 0);
    while (true) {
      std::vector<double> u(d);
      for (int j = 0; j < d; ++j) u[j] = lo[j] + (hi[j] - lo[j]) * (idx[j] + 0.5) / n;
      if (sp.valid(u)) samples.emplace_back(sp.cost(u), u);
      int j = 0;
      while (j < d && ++idx[j] == n) idx[j++] = 0;
      if (j == d) break;
    }
    if (samples.empty()) break;
    std::sort(samples.begin(), samples.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t starts = depth == 0 ? 16 : 4;
    for (std::size_t k = 0; k < samples.size() && k < starts; ++k)
      if (consider(sp.refine(samples[k].second))) return best;
    // zoom around the best sample
    const std::vector<double>& c = samples.front().second;
    for (int j = 0; j < d; ++j) {
      double half = (hi[j] - lo[j]) / 4;
      lo[j] = c[j] - half;
      hi[j] = c[j] + half;
    }
  }
  return best;
}

}  // namespace wythoff
