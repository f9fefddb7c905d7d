#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wythoff/geom3.hpp"

namespace wythoff {

inline constexpr int kInfinite = -1;

// Subset of {0, 1, 2}.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint8_t mask) : mask_(mask & 7u) {}
  IndexSet(std::initializer_list<int> members);

  // "01", "2", "012"; throws InvalidArgument on anything else.
  static IndexSet parse(std::string_view text);

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  std::uint8_t mask() const { return mask_; }
  IndexSet complement() const { return IndexSet(static_cast<std::uint8_t>(~mask_ & 7u)); }
  std::vector<int> members() const;
  std::string str() const;

  friend bool operator==(IndexSet a, IndexSet b) { return a.mask_ == b.mask_; }
  friend bool operator<(IndexSet a, IndexSet b) { return a.mask_ < b.mask_; }

 private:
  std::uint8_t mask_ = 0;
};

// All seven non-empty subsets, ordered 0, 1, 2, 01, 02, 12, 012.
const std::vector<IndexSet>& all_index_sets();

struct GeneratorSet {
  std::array<Isometry, 3> r;

  const Isometry& operator[](int i) const { return r[i]; }
  Isometry& operator[](int i) { return r[i]; }
};

// Word over the generator labels; evaluated left to right as r[w0] o r[w1] o ...
Isometry evaluate(const GeneratorSet& gens, std::string_view word);

struct Element {
  Isometry iso;
  std::string word;
};

struct GroupElements {
  std::vector<Element> elements;
  bool complete = false;
};

struct Window {
  Vec3 center;
  double radius = 0;
};

struct EnumerateOptions {
  int max_word = 40;
  std::size_t element_cap = 200000;
  // Point whose image decides retention; defaults to the window centre.
  std::optional<Vec3> probe;
  // Extra slack beyond the radius; negative means twice the edge scale at the probe.
  double margin = -1;
};

// Breadth-first closure under right multiplication by the generators listed in
// `labels`, retaining elements that keep the probe within radius + margin of
// the centre. `complete` is true iff nothing was pruned or cut by the word bound.
GroupElements enumerate_elements(const GeneratorSet& gens, const Window& window,
                                 const EnumerateOptions& options = {});
GroupElements enumerate_elements(const GeneratorSet& gens, IndexSet labels,
                                 const Window& window, const EnumerateOptions& options = {});

GroupElements dihedral_elements(const GeneratorSet& gens, int i, int j, const Window& window);

// Deduplicated images of p inside the window, sorted lexicographically.
std::vector<Vec3> orbit(const Vec3& p, const GeneratorSet& gens, const Window& window);

// True iff r_i moves p exactly for i in `moved` and the elements fixing p are
// exactly the closure of the remaining generators.
bool stabilizer_check(const Vec3& p, const GeneratorSet& gens, IndexSet moved);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold() const;
  std::string first_failure() const;
};

// r_i^2 = 1, (r0 r2)^2 = 1, (r0 r1)^p = 1, (r1 r2)^q = 1 with p possibly kInfinite,
// in which case r0 r1 must have no finite order below `limit`.
RelationReport verify_relations(const GeneratorSet& gens, int p, int q, int limit = 64);
// Throws RelationViolated naming the first failing relation.
void require_relations(const GeneratorSet& gens, int p, int q, int limit = 64);

// Tolerance-aware point lookup on a hashed grid.
class PointIndex {
 public:
  explicit PointIndex(double tol = kEpsPoint);

  // Index of a stored point within tolerance, or -1.
  int find(const Vec3& p) const;
  // Returns the existing index or appends.
  int insert(const Vec3& p);
  const std::vector<Vec3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  struct Key {
    std::int64_t x, y, z;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  Key key(const Vec3& p) const;

  double tol_;
  double cell_;
  std::vector<Vec3> points_;
  std::unordered_map<Key, std::vector<int>, KeyHash> cells_;
};

// Lexicographic order after rounding to the point tolerance grid.
bool canonical_less(const Vec3& a, const Vec3& b);

}  // namespace wythoff
