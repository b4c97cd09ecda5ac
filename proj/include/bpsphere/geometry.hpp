#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace bpsphere {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Ordered tuple of points sharing one ambient dimension.
using PointTuple = std::vector<Vector>;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a tuple is (numerically) affinely dependent or otherwise
/// sits on the measure-zero set where a parametrization is undefined.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orthonormal basis of a linear subspace, stored as the columns of an
/// n x k matrix. The empty frame (k = 0) still knows its ambient dimension.
class Frame {
 public:
  Frame() = default;

  /// Validates orthonormality of the columns within `tol`.
  static Frame from_orthonormal(Matrix basis, double tol = 1e-10);

  /// Gram-Schmidt over `vectors` in input order. Throws DegenerateInput when
  /// a vector is dependent on its predecessors (residual below rel_tol of
  /// its norm).
  static Frame span_of(const std::vector<Vector>& vectors, int ambient_dim, double rel_tol = 1e-10);

  static Frame identity(int n);
  static Frame empty(int n);
  /// span(e_first, ..., e_{first+count-1}), zero-based.
  static Frame coordinate(int n, int first, int count);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int subspace_dim() const { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }
  Vector vector(int i) const { return basis_.col(i); }

  /// Coordinates of v in this basis (B^T v).
  Vector coordinates(const Vector& v) const;
  /// Embeds coordinates back into the ambient space (B c).
  Vector embed(const Vector& coords) const;

  /// Largest |<b_i, b_j> - delta_ij|.
  double orthonormality_residual() const;

 private:
  explicit Frame(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_{Matrix(0, 0)};
};

/// A = offset + span(direction), offset orthogonal to the direction.
struct AffineFlat {
  Frame direction;
  Vector offset;

  /// Builds the flat through `point` with the given direction; the stored
  /// offset is the component of `point` orthogonal to the direction.
  static AffineFlat through(const Vector& point, Frame direction);

  int dim() const { return direction.subspace_dim(); }
  int ambient_dim() const { return direction.ambient_dim(); }
  Vector project(const Vector& x) const;
};

/// A sphere of radius r centred at z inside z + span(carrier).
struct SphereSpec {
  Vector center;
  double radius = 0.0;
  Frame carrier;
};

/// x = z + r u, u_i unit vectors in span(L).
struct CircumscribedParam {
  Vector z;
  Frame L;
  double r = 0.0;
  PointTuple u;
};

/// x = rstar z + r u with rstar = sqrt(r^2 - r0^2). The fixed circle is
/// S(0, r0, Q); z is a unit vector of span(L), u_i unit vectors of
/// span(L) + span(Q). Q empty and r0 = 0 gives the sphere-through-origin
/// parametrization.
struct PivotedCircleParam {
  Frame Q;
  double r0 = 0.0;
  Frame L;
  double r = 0.0;
  Vector z;
  PointTuple u;

  double rstar() const;
};

/// x = z + r u with z in the anchor flat F; u_i unit vectors of
/// span(P) + F_perp. P is stored in ambient coordinates and lies inside
/// F's direction space.
struct AnchoredParam {
  AffineFlat F;
  Vector z;
  double r = 0.0;
  Frame P;
  PointTuple u;
};

/// x = p + R u on the unit sphere of R^{n+1}; R = sqrt(1 - |p|^2).
struct SphereOnSphereParam {
  Frame sigma;
  Vector p;
  PointTuple u;

  double R() const;
};

/// Linear formula: points u_i in the linear subspace L.
struct LinearParam {
  Frame L;
  PointTuple u;
};

/// Affine formula: x = h + u, h in L_perp, u_i in L.
struct AffineParam {
  Frame L;
  Vector h;
  PointTuple u;
};

// --- primitives --------------------------------------------------------------

/// k-volume of the simplex with vertices (pivot,) points; k = #vertices - 1.
/// A single vertex has volume 1 by convention.
double simplex_volume(const PointTuple& points, const std::optional<Vector>& pivot = std::nullopt);

/// k! Vol_k, i.e. sqrt(det(E^T E)) for the edge matrix E.
double parallelotope_volume(const PointTuple& points, const std::optional<Vector>& pivot = std::nullopt);

Vector project_onto(const Frame& frame, const Vector& v);

/// Orthonormal frame of span(frame)^perp, taken from a full QR of the basis.
Frame orthocomplement(const Frame& frame);

/// Frame of span(a) + span(b); both must be mutually orthogonal.
Frame direct_sum(const Frame& a, const Frame& b);

/// True when k! Vol_k < 1e-10 * diam^k.
bool is_degenerate(const PointTuple& points);

double tuple_diameter(const PointTuple& points);

// --- theorem maps ------------------------------------------------------------

CircumscribedParam decompose_circumscribed(const PointTuple& x);
PointTuple reconstruct_circumscribed(const CircumscribedParam& p);

PivotedCircleParam decompose_pivoted_circle(const PointTuple& x, const Frame& Q, double r0);
PointTuple reconstruct_pivoted_circle(const PivotedCircleParam& p);

AnchoredParam decompose_anchored(const PointTuple& x, const AffineFlat& F);
PointTuple reconstruct_anchored(const AnchoredParam& p);

SphereOnSphereParam decompose_on_sphere(const PointTuple& x);
PointTuple reconstruct_on_sphere(const SphereOnSphereParam& p);

PointTuple reconstruct_linear(const LinearParam& p);
PointTuple reconstruct_affine(const AffineParam& p);

/// Checks that every point has dimension `n` (or, if n < 0, that all agree)
/// and that all entries are finite. Returns the common dimension.
int check_tuple(const PointTuple& points, int n = -1);

}  // namespace bpsphere
