#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace wythoff {

inline constexpr double kEpsOrtho = 1e-9;
inline constexpr double kEpsPoint = 1e-7;
inline constexpr double kRelTol = 1e-8;
inline constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a *= 1.0 / s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }
inline bool near(const Vec3& a, const Vec3& b, double tol = kEpsPoint) {
  return distance(a, b) <= tol;
}

// Row-major 3x3.
struct Mat3 {
  std::array<double, 9> m{};

  static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c);

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
  Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

  Mat3 transposed() const;
  double det() const;
  double trace() const { return m[0] + m[4] + m[8]; }
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(double s, const Mat3& a);

// x -> linear * x + shift
struct Isometry {
  Mat3 linear = Mat3::identity();
  Vec3 shift;

  static Isometry identity() { return {}; }
  Vec3 operator()(const Vec3& p) const { return linear * p + shift; }
};

// compose(a, b) applies b first, then a.
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& g);
Isometry power(const Isometry& g, int n);
bool approx_equal(const Isometry& a, const Isometry& b, double tol = kEpsPoint);
bool is_identity(const Isometry& g, double tol = kEpsPoint);
bool is_orthogonal(const Mat3& m, double tol = kEpsOrtho);
bool is_involution(const Isometry& g, double tol = kEpsPoint);

// Reflection in the plane {x : dot(normal, x) == offset}.
Isometry reflection(const Vec3& normal, double offset = 0.0);
Isometry reflection_through(const Vec3& point, const Vec3& normal);
Isometry rotation(const Vec3& axis, double angle, const Vec3& point = {});
Isometry translation(const Vec3& t);
Isometry point_reflection(const Vec3& centre);

// Affine subspace: basepoint + span(directions), directions orthonormal.
struct AffineSubspace {
  int dimension = 0;
  Vec3 basepoint;
  std::vector<Vec3> directions;

  static AffineSubspace whole_space();
  Vec3 project(const Vec3& p) const;
  bool contains(const Vec3& p, double tol = kEpsPoint) const;
};
using MirrorInfo = AffineSubspace;

// Fixed-point set of an involution. Throws NotInvolution otherwise.
MirrorInfo mirror(const Isometry& g);

// Empty optional when the subspaces do not meet.
std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b);

// Orthonormal basis of span(vs) via Gram-Schmidt; drops near-dependent vectors.
std::vector<Vec3> orthonormalize(const std::vector<Vec3>& vs, double tol = 1e-9);

enum class IsometryTag {
  Identity,
  PlaneReflection,
  HalfTurn,
  PointReflection,
  Rotation,
  Screw,
  Translation,
  RotoReflection,
  Glide,
};

const char* to_string(IsometryTag tag);

// Canonical description. Rotation-like kinds keep the axis oriented so the
// turn is right-handed with angle in (0, pi]; pitch is the signed shift
// along that axis. Planes carry their unit normal in axis.
struct IsometryKind {
  IsometryTag tag = IsometryTag::Identity;
  double angle = 0;
  double pitch = 0;
  Vec3 axis;
  Vec3 point;
  Vec3 vector;
};

IsometryKind classify(const Isometry& g);
Isometry synthesize(const IsometryKind& k);

// Smallest n in [1, limit] with g^n == id, or 0 when none.
int order(const Isometry& g, int limit = 64);

}  // namespace wythoff
