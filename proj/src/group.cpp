#include "wythoff/group.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "wythoff/errors.hpp"

namespace wythoff {

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int i : members) {
    if (i < 0 || i > 2) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    mask_ |= static_cast<std::uint8_t>(1u << i);
  }
}

IndexSet IndexSet::parse(std::string_view text) {
  std::uint8_t mask = 0;
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty index set");
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c < '0' || c > '2')
      throw Error(ErrorCode::InvalidArgument, "bad index set '" + std::string(text) + "'");
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (c - '0'));
    if (mask & bit)
      throw Error(ErrorCode::InvalidArgument, "repeated index in '" + std::string(text) + "'");
    mask |= bit;
  }
  return IndexSet(mask);
}

int IndexSet::size() const { return contains(0) + contains(1) + contains(2); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::str() const {
  std::string s;
  for (int i : members()) s += static_cast<char>('0' + i);
  return s;
}

const std::vector<IndexSet>& all_index_sets() {
  static const std::vector<IndexSet> sets = {
      IndexSet{0}, IndexSet{1}, IndexSet{2}, IndexSet{0, 1},
      IndexSet{0, 2}, IndexSet{1, 2}, IndexSet{0, 1, 2}};
  return sets;
}

Isometry evaluate(const GeneratorSet& gens, std::string_view word) {
  Isometry g;
  for (char c : word) {
    int i = c - '0';
    if (i < 0 || i > 2) throw Error(ErrorCode::InvalidArgument, "bad word");
    g = compose(g, gens[i]);
  }
  return g;
}

// PointIndex

PointIndex::PointIndex(double tol) : tol_(tol), cell_(std::max(10 * tol, 1e-12)) {}

std::size_t PointIndex::KeyHash::operator()(const Key& k) const {
  std::size_t h = static_cast<std::size_t>(k.x) * 73856093u;
  h ^= static_cast<std::size_t>(k.y) * 19349663u;
  h ^= static_cast<std::size_t>(k.z) * 83492791u;
  return h;
}

PointIndex::Key PointIndex::key(const Vec3& p) const {
  return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
          static_cast<std::int64_t>(std::floor(p.y / cell_)),
          static_cast<std::int64_t>(std::floor(p.z / cell_))};
}

int PointIndex::find(const Vec3& p) const {
  Key k = key(p);
  for (std::int64_t dx = -1; dx <= 1; ++dx)
    for (std::int64_t dy = -1; dy <= 1; ++dy)
      for (std::int64_t dz = -1; dz <= 1; ++dz) {
        auto it = cells_.find({k.x + dx, k.y + dy, k.z + dz});
        if (it == cells_.end()) continue;
        for (int id : it->second)
          if (distance(points_[id], p) <= tol_) return id;
      }
  return -1;
}

int PointIndex::insert(const Vec3& p) {
  int id = find(p);
  if (id >= 0) return id;
  id = static_cast<int>(points_.size());
  points_.push_back(p);
  cells_[key(p)].push_back(id);
  return id;
}

bool canonical_less(const Vec3& a, const Vec3& b) {
  auto r = [](double v) { return std::llround(v / kEpsPoint); };
  return std::make_tuple(r(a.x), r(a.y), r(a.z)) < std::make_tuple(r(b.x), r(b.y), r(b.z));
}

namespace {

// A point no catalogue element fixes unless it is the identity.
constexpr Vec3 kGenericProbe{0.1234567891, 0.2718281828, 0.3819660113};

// Isometries bucketed by the image of the generic probe.
class IsometryIndex {
 public:
  bool contains(const Isometry& g) const {
    int id = images_.find(g(kGenericProbe));
    if (id < 0) return false;
    for (const Isometry& h : buckets_[id])
      if (approx_equal(g, h, 1e-6)) return true;
    return false;
  }
  void insert(const Isometry& g) {
    int id = images_.insert(g(kGenericProbe));
    if (static_cast<std::size_t>(id) >= buckets_.size()) buckets_.resize(id + 1);
    buckets_[id].push_back(g);
  }

 private:
  PointIndex images_{1e-7};
  std::vector<std::vector<Isometry>> buckets_;
};

}  // namespace

GroupElements enumerate_elements(const GeneratorSet& gens, const Window& window,
                                 const EnumerateOptions& options) {
  return enumerate_elements(gens, IndexSet(7), window, options);
}

GroupElements enumerate_elements(const GeneratorSet& gens, IndexSet labels,
                                 const Window& window, const EnumerateOptions& options) {
  Vec3 probe = options.probe.value_or(window.center);
  double margin = options.margin;
  if (margin < 0) {
    double scale = 0;
    for (int i : labels.members()) scale = std::max(scale, distance(gens[i](probe), probe));
    margin = 2 * scale;
  }
  double reach = window.radius + margin + kEpsPoint;

  GroupElements out;
  IsometryIndex seen;
  out.elements.push_back({Isometry::identity(), ""});
  seen.insert(Isometry::identity());
  bool pruned = false, cut = false;
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    // copy: push_back below may reallocate
    Element cur = out.elements[head];
    for (int i : labels.members()) {
      Isometry next = compose(cur.iso, gens[i]);
      if (seen.contains(next)) continue;
      if (distance(next(probe), window.center) > reach) {
        pruned = true;
        continue;
      }
      if (static_cast<int>(cur.word.size()) >= options.max_word) {
        cut = true;
        continue;
      }
      seen.insert(next);
      out.elements.push_back({next, cur.word + static_cast<char>('0' + i)});
      if (out.elements.size() > options.element_cap)
        throw Error(ErrorCode::BudgetExceeded,
                    "group enumeration exceeded " + std::to_string(options.element_cap) +
                        " elements");
    }
  }
  out.complete = !pruned && !cut;
  return out;
}

GroupElements dihedral_elements(const GeneratorSet& gens, int i, int j, const Window& window) {
  return enumerate_elements(gens, IndexSet{i, j}, window);
}

std::vector<Vec3> orbit(const Vec3& p, const GeneratorSet& gens, const Window& window) {
  EnumerateOptions opt;
  opt.probe = p;
  GroupElements els = enumerate_elements(gens, window, opt);
  PointIndex idx;
  for (const Element& e : els.elements) {
    Vec3 q = e.iso(p);
    if (distance(q, window.center) <= window.radius + kEpsPoint) idx.insert(q);
  }
  std::vector<Vec3> pts = idx.points();
  std::sort(pts.begin(), pts.end(), canonical_less);
  return pts;
}

bool stabilizer_check(const Vec3& p, const GeneratorSet& gens, IndexSet moved) {
  IndexSet subset = moved.complement();
  double scale = 0;
  for (int i = 0; i < 3; ++i) {
    double d = distance(gens[i](p), p);
    bool fixed = d <= kEpsPoint;
    if (fixed != subset.contains(i)) return false;
    scale = std::max(scale, d);
  }
  EnumerateOptions sub_opt;
  sub_opt.max_word = 64;
  sub_opt.element_cap = 20000;
  sub_opt.probe = p;
  GroupElements sub = enumerate_elements(gens, subset, Window{p, 1.0}, sub_opt);
  if (scale == 0) return subset.size() == 3;

  EnumerateOptions opt;
  opt.max_word = 64;
  opt.element_cap = 50000;
  opt.probe = p;
  opt.margin = 0;
  GroupElements near_p = enumerate_elements(gens, Window{p, 4 * scale}, opt);
  IsometryIndex sub_index;
  for (const Element& e : sub.elements) sub_index.insert(e.iso);
  std::size_t fixing = 0;
  for (const Element& e : near_p.elements) {
    if (distance(e.iso(p), p) > kEpsPoint) continue;
    ++fixing;
    if (!sub_index.contains(e.iso)) return false;
  }
  return fixing == sub.elements.size();
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

std::string RelationReport::first_failure() const {
  for (const RelationCheck& c : checks)
    if (!c.holds) return c.relation;
  return {};
}

RelationReport verify_relations(const GeneratorSet& gens, int p, int q, int limit) {
  RelationReport rep;
  for (int i = 0; i < 3; ++i) {
    bool ok = is_orthogonal(gens[i].linear) && !is_identity(gens[i]) && is_involution(gens[i]);
    rep.checks.push_back({"r" + std::to_string(i) + "^2 = 1", ok});
  }
  rep.checks.push_back({"(r0 r2)^2 = 1", is_involution(compose(gens[0], gens[2]))});
  auto period = [&](const Isometry& g, int n, const std::string& name) {
    int o = order(g, limit);
    bool ok = n == kInfinite ? o == 0 : o == n;
    std::string label = name + "^" + (n == kInfinite ? std::string("inf") : std::to_string(n)) +
                        " = 1";
    rep.checks.push_back({label, ok});
  };
  period(compose(gens[0], gens[1]), p, "(r0 r1)");
  period(compose(gens[1], gens[2]), q, "(r1 r2)");
  return rep;
}

void require_relations(const GeneratorSet& gens, int p, int q, int limit) {
  RelationReport rep = verify_relations(gens, p, q, limit);
  if (!rep.all_hold())
    throw Error(ErrorCode::RelationViolated, "relation fails: " + rep.first_failure());
}

}  // namespace wythoff
