#include "bpsphere/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace bpsphere {

namespace {

constexpr double kDegeneracyRatio = 1e-10;

Matrix edge_matrix(const PointTuple& points, const std::optional<Vector>& pivot) {
  const Vector& base = pivot ? *pivot : points.front();
  const std::size_t first = pivot ? 0 : 1;
  Matrix edges(base.size(), static_cast<Eigen::Index>(points.size() - first));
  for (std::size_t i = first; i < points.size(); ++i) {
    edges.col(static_cast<Eigen::Index>(i - first)) = points[i] - base;
  }
  return edges;
}

double factorial_small(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Solves M c = b by Householder QR; M is square.
Vector qr_solve(const Matrix& M, const Vector& b) {
  return M.colPivHouseholderQr().solve(b);
}

void normalize_all(PointTuple& u) {
  for (auto& v : u) v.normalize();
}

}  // namespace

// --- Frame -------------------------------------------------------------------

Frame Frame::from_orthonormal(Matrix basis, double tol) {
  Frame f(std::move(basis));
  if (f.subspace_dim() > f.ambient_dim()) {
    throw InvalidInput("frame has more basis vectors than ambient dimensions");
  }
  if (!f.basis_.allFinite()) throw InvalidInput("frame basis has non-finite entries");
  if (f.orthonormality_residual() > tol) throw InvalidInput("frame basis is not orthonormal");
  return f;
}

Frame Frame::span_of(const std::vector<Vector>& vectors, int ambient_dim, double rel_tol) {
  Matrix basis(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw InvalidInput("span_of: dimension mismatch");
    Vector v = vectors[i];
    const double norm0 = v.norm();
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto bj = basis.col(static_cast<Eigen::Index>(j));
        v -= bj.dot(v) * bj;
      }
    }
    const double norm = v.norm();
    if (!(norm0 > 0.0) || norm <= rel_tol * norm0) {
      throw DegenerateInput("span_of: vectors are linearly dependent");
    }
    basis.col(static_cast<Eigen::Index>(i)) = v / norm;
  }
  return Frame(std::move(basis));
}

Frame Frame::identity(int n) { return Frame(Matrix::Identity(n, n)); }

Frame Frame::empty(int n) { return Frame(Matrix(n, 0)); }

Frame Frame::coordinate(int n, int first, int count) {
  if (first < 0 || count < 0 || first + count > n) throw InvalidInput("coordinate frame out of range");
  Matrix basis = Matrix::Zero(n, count);
  for (int i = 0; i < count; ++i) basis(first + i, i) = 1.0;
  return Frame(std::move(basis));
}

Vector Frame::coordinates(const Vector& v) const { return basis_.transpose() * v; }

Vector Frame::embed(const Vector& coords) const { return basis_ * coords; }

double Frame::orthonormality_residual() const {
  if (basis_.cols() == 0) return 0.0;
  const Matrix gram = basis_.transpose() * basis_;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

// --- AffineFlat ----------------------------------------------------------------

AffineFlat AffineFlat::through(const Vector& point, Frame direction) {
  if (point.size() != direction.ambient_dim()) throw InvalidInput("flat: dimension mismatch");
  Vector offset = point - project_onto(direction, point);
  return AffineFlat{std::move(direction), std::move(offset)};
}

Vector AffineFlat::project(const Vector& x) const { return offset + project_onto(direction, x - offset); }

double PivotedCircleParam::rstar() const { return std::sqrt(std::max(0.0, r * r - r0 * r0)); }

double SphereOnSphereParam::R() const { return std::sqrt(std::max(0.0, 1.0 - p.squaredNorm())); }

// --- primitives --------------------------------------------------------------

int check_tuple(const PointTuple& points, int n) {
  int dim = n;
  for (const auto& x : points) {
    if (dim < 0) dim = static_cast<int>(x.size());
    if (x.size() != dim) throw InvalidInput("point tuple: dimension mismatch");
    if (!x.allFinite()) throw InvalidInput("point tuple: non-finite coordinate");
  }
  return dim;
}

double parallelotope_volume(const PointTuple& points, const std::optional<Vector>& pivot) {
  const std::size_t vertices = points.size() + (pivot ? 1 : 0);
  if (vertices == 0) throw InvalidInput("simplex_volume: no vertices");
  const int n = check_tuple(points, pivot ? static_cast<int>(pivot->size()) : -1);
  if (pivot && !pivot->allFinite()) throw InvalidInput("simplex_volume: non-finite pivot");
  const int k = static_cast<int>(vertices) - 1;
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  const Matrix edges = edge_matrix(points, pivot);
  double det = 0.0;
  if (k == n) {
    det = std::abs(edges.partialPivLu().determinant());
    return det;
  }
  const Matrix gram = edges.transpose() * edges;
  det = gram.partialPivLu().determinant();
  return det > 0.0 ? std::sqrt(det) : 0.0;
}

double simplex_volume(const PointTuple& points, const std::optional<Vector>& pivot) {
  const double pv = parallelotope_volume(points, pivot);
  const int k = static_cast<int>(points.size()) - (pivot ? 0 : 1);
  return pv / factorial_small(k);
}

Vector project_onto(const Frame& frame, const Vector& v) {
  if (v.size() != frame.ambient_dim()) throw InvalidInput("project_onto: dimension mismatch");
  return frame.basis() * (frame.basis().transpose() * v);
}

Frame orthocomplement(const Frame& frame) {
  const int n = frame.ambient_dim();
  const int k = frame.subspace_dim();
  if (k == 0) return Frame::identity(n);
  if (k == n) return Frame::empty(n);
  Eigen::HouseholderQR<Matrix> qr(frame.basis());
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return Frame::from_orthonormal(q.rightCols(n - k));
}

Frame direct_sum(const Frame& a, const Frame& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("direct_sum: dimension mismatch");
  Matrix basis(a.ambient_dim(), a.subspace_dim() + b.subspace_dim());
  basis << a.basis(), b.basis();
  return Frame::from_orthonormal(std::move(basis));
}

double tuple_diameter(const PointTuple& points) {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) d = std::max(d, (points[i] - points[j]).norm());
  return d;
}

bool is_degenerate(const PointTuple& points) {
  const int k = static_cast<int>(points.size()) - 1;
  if (k <= 0) return false;
  const double diam = tuple_diameter(points);
  if (!(diam > 0.0)) return true;
  return parallelotope_volume(points) < kDegeneracyRatio * std::pow(diam, k);
}

// --- circumscribed -------------------------------------------------------------

CircumscribedParam decompose_circumscribed(const PointTuple& x) {
  if (x.size() < 2) throw InvalidInput("decompose_circumscribed: need at least two points");
  const int n = check_tuple(x);
  const int k = static_cast<int>(x.size()) - 1;
  if (k > n) throw InvalidInput("decompose_circumscribed: more than n+1 points");
  if (is_degenerate(x)) throw DegenerateInput("decompose_circumscribed: affinely dependent points");

  std::vector<Vector> edges;
  edges.reserve(k);
  for (int i = 1; i <= k; ++i) edges.push_back(x[i] - x[0]);
  Frame L = Frame::span_of(edges, n);

  // Equidistance in hull coordinates: 2 <y_i, c> = |y_i|^2.
  Matrix M(k, k);
  Vector b(k);
  for (int i = 0; i < k; ++i) {
    const Vector y = L.coordinates(edges[i]);
    M.row(i) = 2.0 * y.transpose();
    b(i) = y.squaredNorm();
  }
  const Vector c = qr_solve(M, b);

  CircumscribedParam p;
  p.z = x[0] + L.embed(c);
  p.L = std::move(L);
  double r = 0.0;
  p.u.reserve(x.size());
  for (const auto& xi : x) {
    p.u.push_back(xi - p.z);
    r += p.u.back().norm();
  }
  p.r = r / static_cast<double>(x.size());
  normalize_all(p.u);
  return p;
}

PointTuple reconstruct_circumscribed(const CircumscribedParam& p) {
  PointTuple x;
  x.reserve(p.u.size());
  for (const auto& ui : p.u) x.push_back(p.z + p.r * ui);
  return x;
}

// --- pivoted circle --------------------------------------------------------------

PivotedCircleParam decompose_pivoted_circle(const PointTuple& x, const Frame& Q, double r0) {
  if (x.empty()) throw InvalidInput("decompose_pivoted_circle: empty tuple");
  const int n = Q.ambient_dim();
  check_tuple(x, n);
  const int m = static_cast<int>(x.size());
  const int q = Q.subspace_dim();
  if (m > n - q) throw InvalidInput("decompose_pivoted_circle: need m <= n - q");
  if (!(r0 >= 0.0)) throw InvalidInput("decompose_pivoted_circle: r0 must be non-negative");
  if (q == 0 && r0 != 0.0) throw InvalidInput("decompose_pivoted_circle: r0 must be 0 when Q is empty");

  std::vector<Vector> projected;
  projected.reserve(m);
  for (const auto& xi : x) projected.push_back(xi - project_onto(Q, xi));
  Frame L = Frame::span_of(projected, n);

  // 2 <x_i, c> = |x_i|^2 - r0^2 with c in L.
  Matrix M(m, m);
  Vector b(m);
  for (int i = 0; i < m; ++i) {
    M.row(i) = 2.0 * L.coordinates(projected[i]).transpose();
    b(i) = x[i].squaredNorm() - r0 * r0;
  }
  const Vector center = L.embed(qr_solve(M, b));
  const double cn = center.norm();
  const double scale = std::max(r0, tuple_diameter(x) + x[0].norm());
  if (!(cn > 1e-12 * scale)) throw DegenerateInput("decompose_pivoted_circle: centre direction undefined");

  PivotedCircleParam p;
  p.Q = Q;
  p.r0 = r0;
  p.L = std::move(L);
  p.z = center / cn;
  p.r = std::sqrt(r0 * r0 + cn * cn);
  p.u.reserve(m);
  for (const auto& xi : x) p.u.push_back(xi - center);
  normalize_all(p.u);
  return p;
}

PointTuple reconstruct_pivoted_circle(const PivotedCircleParam& p) {
  const Vector center = p.rstar() * p.z;
  PointTuple x;
  x.reserve(p.u.size());
  for (const auto& ui : p.u) x.push_back(center + p.r * ui);
  return x;
}

// --- anchored ----------------------------------------------------------------------

AnchoredParam decompose_anchored(const PointTuple& x, const AffineFlat& F) {
  if (x.empty()) throw InvalidInput("decompose_anchored: empty tuple");
  const int n = F.ambient_dim();
  check_tuple(x, n);
  const int k = static_cast<int>(x.size()) - 1;
  const int m = F.dim();
  if (k > m) throw InvalidInput("decompose_anchored: need k <= m");

  const Frame& B = F.direction;
  // Equidistance in F coordinates: <d_i, w> = b_i with d_i the projected
  // edges. The minimum-norm solution relative to y0 is the smallest sphere;
  // it lies in y0 + span(d_i).
  const Vector y0 = B.coordinates(x[0] - F.offset);
  const Vector a0 = x[0] - F.offset;
  Matrix D(k, m);
  Vector rhs(k);
  for (int i = 0; i < k; ++i) {
    const Vector e = x[i + 1] - x[0];
    D.row(i) = B.coordinates(e).transpose();
    rhs(i) = 0.5 * e.squaredNorm() + e.dot(a0) - D.row(i).dot(y0);
  }
  Vector w = y0;
  Matrix P_local(m, 0);
  if (k > 0) {
    const double scale = std::max(1.0, D.cwiseAbs().maxCoeff());
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(D);
    cod.setThreshold(1e-10);
    const Vector shift = cod.solve(rhs);
    if ((D * shift - rhs).norm() > 1e-9 * scale * std::max(1.0, rhs.norm()))
      throw DegenerateInput("decompose_anchored: no sphere through the points is centred in F");
    w += shift;
    // Row space of D: the direction of the projected hull.
    Eigen::ColPivHouseholderQR<Matrix> qr(D.transpose());
    qr.setThreshold(1e-10);
    const Matrix Qfull = qr.householderQ();
    P_local = Qfull.leftCols(qr.rank());
  }

  AnchoredParam p;
  p.F = F;
  p.z = F.offset + B.embed(w);
  p.P = Frame::from_orthonormal(B.basis() * P_local);
  double r = 0.0;
  p.u.reserve(x.size());
  for (const auto& xi : x) {
    p.u.push_back(xi - p.z);
    r += p.u.back().norm();
  }
  p.r = r / static_cast<double>(x.size());
  const double scale = tuple_diameter(x) + (x[0] - p.z).norm();
  if (!(p.r > 1e-12 * scale) || !(p.r > 0.0)) throw DegenerateInput("decompose_anchored: zero radius");
  normalize_all(p.u);
  return p;
}

PointTuple reconstruct_anchored(const AnchoredParam& p) {
  PointTuple x;
  x.reserve(p.u.size());
  for (const auto& ui : p.u) x.push_back(p.z + p.r * ui);
  return x;
}

// --- on the sphere -------------------------------------------------------------------

SphereOnSphereParam decompose_on_sphere(const PointTuple& x) {
  if (x.size() < 2) throw InvalidInput("decompose_on_sphere: need at least two points");
  const int dim = check_tuple(x);
  const int k = static_cast<int>(x.size()) - 1;
  if (k > dim - 1) throw InvalidInput("decompose_on_sphere: need k <= n");
  for (const auto& xi : x) {
    if (std::abs(xi.norm() - 1.0) > 1e-10) throw InvalidInput("decompose_on_sphere: points must be unit vectors");
  }
  if (is_degenerate(x)) throw DegenerateInput("decompose_on_sphere: affinely dependent points");

  std::vector<Vector> edges;
  edges.reserve(k);
  for (int i = 1; i <= k; ++i) edges.push_back(x[i] - x[0]);

  SphereOnSphereParam p;
  p.sigma = Frame::span_of(edges, dim);
  p.p = x[0] - project_onto(p.sigma, x[0]);
  const double pn = p.p.norm();
  // Unit inputs put the hull inside the closed ball.
  if (pn > 1.0 + 1e-10) throw DegenerateInput("decompose_on_sphere: hull misses the unit ball");
  if (pn > 1.0) p.p /= pn;
  p.u.reserve(x.size());
  for (const auto& xi : x) p.u.push_back(project_onto(p.sigma, xi - p.p));
  normalize_all(p.u);
  return p;
}

PointTuple reconstruct_on_sphere(const SphereOnSphereParam& p) {
  const double R = p.R();
  PointTuple x;
  x.reserve(p.u.size());
  for (const auto& ui : p.u) x.push_back(p.p + R * ui);
  return x;
}

PointTuple reconstruct_linear(const LinearParam& p) { return p.u; }

PointTuple reconstruct_affine(const AffineParam& p) {
  PointTuple x;
  x.reserve(p.u.size());
  for (const auto& ui : p.u) x.push_back(p.h + ui);
  return x;
}

}  // namespace bpsphere
