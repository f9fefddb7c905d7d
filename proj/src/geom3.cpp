#include "wythoff/geom3.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "wythoff/errors.hpp"

namespace wythoff {

Mat3 Mat3::from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
  return {{a.x, b.x, c.x, a.y, b.y, c.y, a.z, b.z, c.z}};
}

Mat3 Mat3::transposed() const {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
  return t;
}

double Mat3::det() const {
  return dot(row(0), cross(row(1), row(2)));
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 9; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 9; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}

Mat3 operator*(double s, const Mat3& a) {
  Mat3 out;
  for (int i = 0; i < 9; ++i) out.m[i] = s * a.m[i];
  return out;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  return {a.linear * b.linear, a.linear * b.shift + a.shift};
}

Isometry inverse(const Isometry& g) {
  Mat3 lt = g.linear.transposed();
  return {lt, -(lt * g.shift)};
}

Isometry power(const Isometry& g, int n) {
  Isometry base = n < 0 ? inverse(g) : g;
  Isometry out;
  for (int k = 0; k < std::abs(n); ++k) out = compose(out, base);
  return out;
}

bool approx_equal(const Isometry& a, const Isometry& b, double tol) {
  for (int i = 0; i < 9; ++i)
    if (std::abs(a.linear.m[i] - b.linear.m[i]) > tol) return false;
  return near(a.shift, b.shift, tol);
}

bool is_identity(const Isometry& g, double tol) {
  return approx_equal(g, Isometry::identity(), tol);
}

bool is_orthogonal(const Mat3& m, double tol) {
  Mat3 p = m.transposed() * m;
  Mat3 id = Mat3::identity();
  for (int i = 0; i < 9; ++i)
    if (std::abs(p.m[i] - id.m[i]) > tol) return false;
  return true;
}

bool is_involution(const Isometry& g, double tol) {
  return is_identity(compose(g, g), tol);
}

Isometry reflection(const Vec3& normal, double offset) {
  Vec3 n = normalized(normal);
  double d = offset / norm(normal);
  Isometry g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g.linear(r, c) = (r == c ? 1.0 : 0.0) - 2 * n[r] * n[c];
  g.shift = n * (2 * d);
  return g;
}

Isometry reflection_through(const Vec3& point, const Vec3& normal) {
  Vec3 n = normalized(normal);
  return reflection(n, dot(n, point));
}

Isometry rotation(const Vec3& axis, double angle, const Vec3& point) {
  Vec3 a = normalized(axis);
  double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (i == j ? c : 0.0) + (1 - c) * a[i] * a[j];
  r(0, 1) -= s * a.z; r(0, 2) += s * a.y;
  r(1, 0) += s * a.z; r(1, 2) -= s * a.x;
  r(2, 0) -= s * a.y; r(2, 1) += s * a.x;
  return {r, point - r * point};
}

Isometry translation(const Vec3& t) { return {Mat3::identity(), t}; }

Isometry point_reflection(const Vec3& centre) {
  return {-1.0 * Mat3::identity(), centre * 2.0};
}

AffineSubspace AffineSubspace::whole_space() {
  return {3, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

Vec3 AffineSubspace::project(const Vec3& p) const {
  Vec3 out = basepoint;
  for (const Vec3& d : directions) out += d * dot(d, p - basepoint);
  return out;
}

bool AffineSubspace::contains(const Vec3& p, double tol) const {
  return distance(project(p), p) <= tol;
}

std::vector<Vec3> orthonormalize(const std::vector<Vec3>& vs, double tol) {
  std::vector<Vec3> out;
  for (Vec3 v : vs) {
    for (const Vec3& u : out) v -= u * dot(u, v);
    // second pass for stability
    for (const Vec3& u : out) v -= u * dot(u, v);
    double n = norm(v);
    if (n > tol) out.push_back(v / n);
  }
  return out;
}

MirrorInfo mirror(const Isometry& g) {
  if (!is_orthogonal(g.linear) || !is_involution(g))
    throw Error(ErrorCode::NotInvolution, "isometry is not an involution");
  Mat3 p = 0.5 * (Mat3::identity() + g.linear);
  // Rank-revealing pass: pick columns in order of decreasing length.
  std::vector<Vec3> cols = {p.col(0), p.col(1), p.col(2)};
  std::sort(cols.begin(), cols.end(),
            [](const Vec3& a, const Vec3& b) { return norm(a) > norm(b); });
  MirrorInfo m;
  m.basepoint = g.shift * 0.5;
  m.directions = orthonormalize(cols, 1e-6);
  m.dimension = static_cast<int>(m.directions.size());
  return m;
}

namespace {

// Normal equations n . x = n . b of a subspace.
void append_equations(const AffineSubspace& s, std::vector<Vec3>& rows,
                      std::vector<double>& rhs) {
  std::vector<Vec3> basis = s.directions;
  basis.insert(basis.end(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::vector<Vec3> full = orthonormalize(basis, 1e-6);
  for (std::size_t k = s.directions.size(); k < full.size(); ++k) {
    rows.push_back(full[k]);
    rhs.push_back(dot(full[k], s.basepoint));
  }
}

}  // namespace

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b) {
  std::vector<Vec3> rows;
  std::vector<double> rhs;
  append_equations(a, rows, rhs);
  append_equations(b, rows, rhs);
  if (rows.empty()) return AffineSubspace::whole_space();
  Eigen::MatrixXd m(rows.size(), 3);
  Eigen::VectorXd c(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m(i, 0) = rows[i].x; m(i, 1) = rows[i].y; m(i, 2) = rows[i].z;
    c(i) = rhs[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(1e-9);
  Eigen::Vector3d x = svd.solve(c);
  if ((m * x - c).norm() > kEpsPoint) return std::nullopt;
  int rank = static_cast<int>(svd.rank());
  AffineSubspace out;
  out.basepoint = {x(0), x(1), x(2)};
  for (int k = rank; k < 3; ++k) {
    auto v = svd.matrixV().col(k);
    out.directions.push_back(normalized(Vec3{v(0), v(1), v(2)}));
  }
  out.directions = orthonormalize(out.directions);
  out.dimension = static_cast<int>(out.directions.size());
  return out;
}

const char* to_string(IsometryTag tag) {
  switch (tag) {
    case IsometryTag::Identity: return "Identity";
    case IsometryTag::PlaneReflection: return "PlaneReflection";
    case IsometryTag::HalfTurn: return "HalfTurn";
    case IsometryTag::PointReflection: return "PointReflection";
    case IsometryTag::Rotation: return "Rotation";
    case IsometryTag::Screw: return "Screw";
    case IsometryTag::Translation: return "Translation";
    case IsometryTag::RotoReflection: return "RotoReflection";
    case IsometryTag::Glide: return "Glide";
  }
  return "?";
}

namespace {

struct AxisAngle {
  Vec3 axis;
  double angle = 0;  // [0, pi]
};

// Axis and angle of a proper rotation matrix.
AxisAngle axis_angle(const Mat3& r) {
  Vec3 w{(r(2, 1) - r(1, 2)) / 2, (r(0, 2) - r(2, 0)) / 2, (r(1, 0) - r(0, 1)) / 2};
  double c = std::clamp((r.trace() - 1) / 2, -1.0, 1.0);
  double s = norm(w);
  if (s > 1e-7) return {w / s, std::atan2(s, c)};
  if (c > 0) return {{0, 0, 1}, 0.0};
  // half-turn: columns of (R + I) are multiples of the axis
  Mat3 p = r + Mat3::identity();
  Vec3 best = p.col(0);
  for (int k = 1; k < 3; ++k)
    if (norm(p.col(k)) > norm(best)) best = p.col(k);
  return {normalized(best), kPi};
}

Vec3 solve3(const Mat3& a, const Vec3& b) {
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = a(r, c);
  Eigen::Vector3d x = m.fullPivLu().solve(Eigen::Vector3d(b.x, b.y, b.z));
  return {x(0), x(1), x(2)};
}

}  // namespace

IsometryKind classify(const Isometry& g) {
  IsometryKind k;
  const Vec3& s = g.shift;
  if (g.linear.det() > 0) {
    AxisAngle aa = axis_angle(g.linear);
    if (aa.angle < 1e-7) {
      if (norm(s) <= kEpsPoint) return k;
      k.tag = IsometryTag::Translation;
      k.vector = s;
      return k;
    }
    Vec3 a = aa.axis;
    double pitch = dot(s, a);
    Vec3 perp = s - a * pitch;
    double half_cot = aa.angle >= kPi - 1e-12 ? 0.0 : 1.0 / std::tan(aa.angle / 2);
    k.point = 0.5 * (perp + cross(a, perp) * half_cot);
    k.angle = aa.angle;
    bool half_turn = std::abs(aa.angle - kPi) < 1e-7;
    if (std::abs(pitch) <= kEpsPoint) {
      k.tag = half_turn ? IsometryTag::HalfTurn : IsometryTag::Rotation;
      k.axis = a;
      return k;
    }
    if (half_turn && pitch < 0) {
      a = -a;
      pitch = -pitch;
    }
    k.tag = IsometryTag::Screw;
    k.axis = a;
    k.pitch = pitch;
    k.vector = a * pitch;
    return k;
  }

  // improper: -L is a rotation by psi about a, L turns by psi - pi about a
  AxisAngle aa = axis_angle(-1.0 * g.linear);
  if (aa.angle < 1e-7) {
    k.tag = IsometryTag::PointReflection;
    k.angle = kPi;
    k.point = s * 0.5;
    return k;
  }
  if (std::abs(aa.angle - kPi) < 1e-7) {
    Vec3 n = aa.axis;
    double along = dot(s, n);
    Vec3 par = s - n * along;
    k.axis = n;
    k.point = n * (along / 2);
    if (norm(par) <= kEpsPoint) {
      k.tag = IsometryTag::PlaneReflection;
    } else {
      k.tag = IsometryTag::Glide;
      k.vector = par;
    }
    return k;
  }
  k.tag = IsometryTag::RotoReflection;
  k.angle = kPi - aa.angle;
  k.axis = -aa.axis;
  k.point = solve3(Mat3::identity() - g.linear, s);
  return k;
}

Isometry synthesize(const IsometryKind& k) {
  switch (k.tag) {
    case IsometryTag::Identity: return Isometry::identity();
    case IsometryTag::Translation: return translation(k.vector);
    case IsometryTag::Rotation:
    case IsometryTag::HalfTurn: return rotation(k.axis, k.angle, k.point);
    case IsometryTag::Screw:
      return compose(translation(k.axis * k.pitch), rotation(k.axis, k.angle, k.point));
    case IsometryTag::PlaneReflection: return reflection_through(k.point, k.axis);
    case IsometryTag::Glide:
      return compose(translation(k.vector), reflection_through(k.point, k.axis));
    case IsometryTag::PointReflection: return point_reflection(k.point);
    case IsometryTag::RotoReflection:
      return compose(rotation(k.axis, k.angle, k.point), reflection_through(k.point, k.axis));
  }
  return Isometry::identity();
}

int order(const Isometry& g, int limit) {
  Isometry p = g;
  for (int n = 1; n <= limit; ++n) {
    if (is_identity(p, 1e-6)) return n;
    p = compose(p, g);
  }
  return 0;
}

}  // namespace wythoff
