#include "polytope.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <numeric>

#include "wythoff/group.hpp"

namespace wythoff::detail {

namespace {
constexpr double kTol = 1e-9;
}

std::vector<double> Frame::local(const Vec3& p) const {
  std::vector<double> u;
  for (const Vec3& b : basis) u.push_back(dot(b, p - origin));
  return u;
}

Vec3 Frame::global(const std::vector<double>& u) const {
  Vec3 p = origin;
  for (std::size_t k = 0; k < basis.size() && k < u.size(); ++k) p += basis[k] * u[k];
  return p;
}

Frame frame_of(const std::vector<Vec3>& pts, const Vec3& ref) {
  std::vector<Vec3> sorted = pts;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Vec3& a, const Vec3& b) {
    double da = distance(a, ref), db = distance(b, ref);
    if (std::abs(da - db) > kTol) return da < db;
    return canonical_less(a, b);
  });
  Frame f;
  if (sorted.empty()) return f;
  f.origin = sorted[0];
  std::vector<Vec3> dirs;
  for (std::size_t k = 1; k < sorted.size(); ++k) dirs.push_back(sorted[k] - f.origin);
  f.basis = orthonormalize(dirs, 1e-9);
  return f;
}

std::vector<Row> hrep_of(const std::vector<std::vector<double>>& pts, int dim) {
  std::vector<Row> rows;
  auto add = [&](std::vector<double> a, double b) {
    double n = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
    if (n < 1e-12) return;
    for (double& x : a) x /= n;
    b /= n;
    int above = 0, below = 0;
    for (const auto& p : pts) {
      double s = std::inner_product(a.begin(), a.end(), p.begin(), 0.0) - b;
      if (s > kTol) ++above;
      if (s < -kTol) ++below;
    }
    if (above && below) return;
    if (above) {
      for (double& x : a) x = -x;
      b = -b;
    }
    for (const Row& r : rows) {
      double diff = std::abs(r.second - b);
      for (int k = 0; k < dim; ++k) diff += std::abs(r.first[k] - a[k]);
      if (diff < 1e-9) return;
    }
    rows.emplace_back(a, b);
  };
  std::size_t n = pts.size();
  if (dim == 1) {
    for (const auto& p : pts) add({1.0}, p[0]);
  } else if (dim == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pts[j][0] - pts[i][0], dy = pts[j][1] - pts[i][1];
        add({-dy, dx}, -dy * pts[i][0] + dx * pts[i][1]);
      }
  } else if (dim == 3) {
    auto v = [&](std::size_t i) { return Vec3{pts[i][0], pts[i][1], pts[i][2]}; };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vec3 nrm = cross(v(j) - v(i), v(k) - v(i));
          add({nrm.x, nrm.y, nrm.z}, dot(nrm, v(i)));
        }
  }
  return rows;
}

std::vector<Vec3> intersect_with_subspace(const std::vector<Vec3>& pts, const AffineSubspace& s) {
  if (pts.empty()) return {};
  Frame f = frame_of(pts, pts[0]);
  int k = f.dim();
  std::vector<std::vector<double>> local;
  for (const Vec3& p : pts) local.push_back(f.local(p));
  std::vector<Row> rows = hrep_of(local, k);

  // complement of the polytope's affine hull
  std::vector<Vec3> all = f.basis;
  all.insert(all.end(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::vector<Vec3> full = orthonormalize(all, 1e-6);
  std::vector<Vec3> normals(full.begin() + k, full.end());

  int m = s.dimension;
  // x = b + D w; equalities E w = e, inequalities A w <= c
  Eigen::MatrixXd E(normals.size(), m);
  Eigen::VectorXd e(normals.size());
  for (std::size_t r = 0; r < normals.size(); ++r) {
    for (int j = 0; j < m; ++j) E(r, j) = dot(normals[r], s.directions[j]);
    e(r) = dot(normals[r], f.origin - s.basepoint);
  }
  Eigen::MatrixXd A(rows.size(), m);
  Eigen::VectorXd c(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec3 g;  // row normal in global coordinates
    for (int q = 0; q < k; ++q) g += f.basis[q] * rows[r].first[q];
    for (int j = 0; j < m; ++j) A(r, j) = dot(g, s.directions[j]);
    c(r) = rows[r].second - dot(g, s.basepoint - f.origin);
  }

  Eigen::VectorXd w0 = Eigen::VectorXd::Zero(m);
  Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(m, m);
  if (m > 0 && E.rows() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(E, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // absolute cutoff: Eigen's threshold is relative to the largest singular value
    int rank = 0;
    for (Eigen::Index q = 0; q < svd.singularValues().size(); ++q)
      if (svd.singularValues()(q) > 1e-9) ++rank;
    if (rank > 0) {
      svd.setThreshold(1e-9 / svd.singularValues()(0));
      w0 = svd.solve(e);
    }
    if ((E * w0 - e).norm() > 1e-7) return {};
    Z = svd.matrixV().rightCols(m - rank);
  } else if (m == 0 && E.rows() > 0) {
    if (e.norm() > 1e-7) return {};
  }

  auto to_point = [&](const Eigen::VectorXd& w) {
    Vec3 p = s.basepoint;
    for (int j = 0; j < m; ++j) p += s.directions[j] * w(j);
    return p;
  };
  auto feasible = [&](const Eigen::VectorXd& w) {
    if (rows.empty()) return true;
    return ((A * w - c).array() <= 1e-9).all();
  };

  std::vector<Vec3> out;
  auto push = [&](const Vec3& p) {
    for (const Vec3& q : out)
      if (distance(p, q) < 1e-9) return;
    out.push_back(p);
  };
  int r = static_cast<int>(Z.cols());
  if (r == 0) {
    if (feasible(w0)) push(to_point(w0));
    return out;
  }
  Eigen::MatrixXd Az = A * Z;
  Eigen::VectorXd cz = c - A * w0;
  int nr = static_cast<int>(rows.size());
  std::vector<int> idx(r);
  // every r-subset of the inequalities
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == r) {
      Eigen::MatrixXd M(r, r);
      Eigen::VectorXd b(r);
      for (int q = 0; q < r; ++q) {
        M.row(q) = Az.row(idx[q]);
        b(q) = cz(idx[q]);
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
      if (lu.rank() < r) return;
      Eigen::VectorXd z = lu.solve(b);
      Eigen::VectorXd w = w0 + Z * z;
      if (feasible(w)) push(to_point(w));
      return;
    }
    for (int q = start; q < nr; ++q) {
      idx[depth] = q;
      choose(q + 1, depth + 1);
    }
  };
  choose(0, 0);
  return out;
}

Polyhedron Polyhedron::box(const Vec3& c, double h) {
  Polyhedron p;
  Vec3 v[8];
  for (int i = 0; i < 8; ++i)
    v[i] = c + Vec3{(i & 1) ? h : -h, (i & 2) ? h : -h, (i & 4) ? h : -h};
  const int quads[6][4] = {{0, 2, 6, 4}, {1, 5, 7, 3}, {0, 4, 5, 1},
                           {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 6, 7, 5}};
  for (const auto& q : quads) {
    p.faces.push_back({v[q[0]], v[q[1]], v[q[2]], v[q[3]]});
    p.labels.push_back(-1);
  }
  return p;
}

void Polyhedron::clip(const Vec3& n, double offset, int label) {
  std::vector<std::vector<Vec3>> faces_out;
  std::vector<int> labels_out;
  std::vector<Vec3> cut;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const std::vector<Vec3>& poly = faces[f];
    std::vector<Vec3> kept;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Vec3& a = poly[i];
      const Vec3& b = poly[(i + 1) % poly.size()];
      double da = dot(n, a) - offset, db = dot(n, b) - offset;
      if (da <= kTol) kept.push_back(a);
      if (std::abs(da) <= kTol) cut.push_back(a);
      if ((da < -kTol && db > kTol) || (da > kTol && db < -kTol)) {
        Vec3 x = a + (b - a) * (da / (da - db));
        kept.push_back(x);
        cut.push_back(x);
      }
    }
    if (kept.size() >= 3 && polygon_area(kept) > 1e-14) {
      faces_out.push_back(kept);
      labels_out.push_back(labels[f]);
    }
  }
  std::vector<Vec3> uniq;
  for (const Vec3& p : cut)
    if (std::none_of(uniq.begin(), uniq.end(), [&](const Vec3& q) { return distance(p, q) < 1e-9; }))
      uniq.push_back(p);
  if (uniq.size() >= 3) {
    Vec3 ctr;
    for (const Vec3& p : uniq) ctr += p;
    ctr = ctr / static_cast<double>(uniq.size());
    Vec3 u = normalized(uniq[0] - ctr);
    Vec3 v = cross(normalized(n), u);
    std::sort(uniq.begin(), uniq.end(), [&](const Vec3& a, const Vec3& b) {
      return std::atan2(dot(a - ctr, v), dot(a - ctr, u)) <
             std::atan2(dot(b - ctr, v), dot(b - ctr, u));
    });
    if (polygon_area(uniq) > 1e-14) {
      faces_out.push_back(uniq);
      labels_out.push_back(label);
    }
  }
  faces = std::move(faces_out);
  labels = std::move(labels_out);
}

double polygon_area(const std::vector<Vec3>& poly) {
  Vec3 s;
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
  return norm(s) / 2;
}

}  // namespace wythoff::detail
