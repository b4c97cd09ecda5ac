#include "bpsphere/densities.hpp"

#include <algorithm>
#include <cmath>

#include "bpsphere/measures.hpp"

namespace bpsphere {

namespace {

// base^exponent with 0^0 = 1.
double power(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(base, exponent);
}

// k! Vol_k of the simplex (pivot, u) or (u), written through the Gram
// determinant: k! Vol_k = sqrt(det E^T E).
double scaled_volume(const PointTuple& u, const std::optional<Vector>& pivot = std::nullopt) {
  return parallelotope_volume(u, pivot);
}

PointTuple project_all(const Frame& frame, const PointTuple& u) {
  PointTuple out;
  out.reserve(u.size());
  for (const auto& ui : u) out.push_back(project_onto(frame, ui));
  return out;
}

template <class T>
const T& expect(const SphereParam& param, TheoremId id) {
  if (const T* p = std::get_if<T>(&param)) return *p;
  throw InvalidInput("density: parameter type does not match theorem " + std::string(theorem_name(id)));
}

}  // namespace

double density_linear_bp(const PointTuple& u, int k, int n) {
  if (k < 0 || k > n) throw InvalidInput("density_linear_bp: need k <= n");
  if (static_cast<int>(u.size()) != k) throw InvalidInput("density_linear_bp: need k points");
  if (k == 0) return 1.0;
  return power(scaled_volume(u, Vector::Zero(u.front().size())), n - k);
}

double density_affine_bp(const PointTuple& u, int k, int n) {
  if (k < 0 || k > n) throw InvalidInput("density_affine_bp: need k <= n");
  if (static_cast<int>(u.size()) != k + 1) throw InvalidInput("density_affine_bp: need k+1 points");
  return power(scaled_volume(u), n - k);
}

double density_circumscribed(const CircumscribedParam& p, int n) {
  const int k = static_cast<int>(p.u.size()) - 1;
  if (k < 1 || k > n) throw InvalidInput("density_circumscribed: need 1 <= k <= n");
  return power(p.r, n * k - 1) * power(scaled_volume(p.u), n - k + 1);
}

double density_top(double r, const PointTuple& u, int n) {
  if (static_cast<int>(u.size()) != n + 1) throw InvalidInput("density_top: need n+1 points");
  return power(r, n * n - 1) * scaled_volume(u);
}

double density_pivoted_first(double r, const Vector& z, const PointTuple& u, int n) {
  if (static_cast<int>(u.size()) != n) throw InvalidInput("density_pivoted_first: need n points");
  return power(r, n * n - 1) * scaled_volume(u, Vector(-z));
}

double density_pivoted_second(double r, const Vector& z, const PointTuple& u, int n) {
  const int m = static_cast<int>(u.size());
  if (m < 1 || m > n) throw InvalidInput("density_pivoted_second: need 1 <= m <= n");
  return power(r, m * n - 1) * power(scaled_volume(u, Vector(-z)), n - m + 1);
}

double density_pivoted(const PivotedCircleParam& p, int n) {
  const int m = static_cast<int>(p.u.size());
  const int q = p.Q.subspace_dim();
  if (m < 1 || m > n - q) throw InvalidInput("density_pivoted: need 1 <= m <= n - q");
  if (p.r < p.r0) throw InvalidInput("density_pivoted: need r >= r0");
  const double rstar_sq = std::max(0.0, p.r * p.r - p.r0 * p.r0);
  const double rstar = std::sqrt(rstar_sq);
  const Vector apex = p.r > 0.0 ? Vector(-(rstar / p.r) * p.z) : Vector(Vector::Zero(p.z.size()));
  // With Q empty the u_i already lie in span(L).
  const double vol = q == 0 ? scaled_volume(p.u, apex) : scaled_volume(project_all(p.L, p.u), apex);
  return power(p.r, m * (n - 1) + 1) * power(rstar_sq, 0.5 * (m - 2)) * power(vol, n - q - m + 1);
}

double density_anchored(const AnchoredParam& p, int n) {
  const int k = static_cast<int>(p.u.size()) - 1;
  const int m = p.F.dim();
  if (k < 0 || k > m || m > n) throw InvalidInput("density_anchored: need 0 <= k <= m <= n");
  const int alpha = n * (k + 1) - (m + 1);
  const double vol = k == 0 ? 1.0 : scaled_volume(project_all(p.P, p.u));
  return power(p.r, alpha) * power(vol, m - k + 1);
}

double density_on_sphere(const SphereOnSphereParam& p, int n) {
  const int k = static_cast<int>(p.u.size()) - 1;
  if (k < 1 || k > n) throw InvalidInput("density_on_sphere: need 1 <= k <= n");
  return power(p.R(), k * n - 2) * power(scaled_volume(p.u), n - k + 1);
}

double density_on_sphere_symmetric(double t, const PointTuple& u, int k, int n) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("density_on_sphere_symmetric: t must lie in [0,1]");
  if (k < 1 || k > n) throw InvalidInput("density_on_sphere_symmetric: need 1 <= k <= n");
  if (static_cast<int>(u.size()) != k + 1) throw InvalidInput("density_on_sphere_symmetric: need k+1 points");
  return power(t, 0.5 * (k * n - 2)) * power(1.0 - t, 0.5 * (n - k - 1)) * power(scaled_volume(u), n - k + 1);
}

double on_sphere_symmetric_prefactor(int k, int n) {
  return 0.5 * sphere_surface_area(n + 1) * grassmannian_measure(k, n);
}

double density(const TheoremConfig& c, const SphereParam& param) {
  switch (c.theorem) {
    case TheoremId::kLinearBP:
      return density_linear_bp(expect<LinearParam>(param, c.theorem).u, c.k, c.n);
    case TheoremId::kAffineBP: {
      const auto& p = expect<AffineParam>(param, c.theorem);
      return density_affine_bp(p.u, c.k, c.n);
    }
    case TheoremId::kCircumscribed:
      return density_circumscribed(expect<CircumscribedParam>(param, c.theorem), c.n);
    case TheoremId::kTopDimensional: {
      const auto& p = expect<CircumscribedParam>(param, c.theorem);
      return density_top(p.r, p.u, c.n);
    }
    case TheoremId::kPivoted1: {
      const auto& p = expect<PivotedCircleParam>(param, c.theorem);
      return density_pivoted_first(p.r, p.z, p.u, c.n);
    }
    case TheoremId::kPivoted2: {
      const auto& p = expect<PivotedCircleParam>(param, c.theorem);
      return density_pivoted_second(p.r, p.z, p.u, c.n);
    }
    case TheoremId::kPivotedCircle:
      return density_pivoted(expect<PivotedCircleParam>(param, c.theorem), c.n);
    case TheoremId::kAnchored:
      return density_anchored(expect<AnchoredParam>(param, c.theorem), c.n);
    case TheoremId::kOnSphere:
      return density_on_sphere(expect<SphereOnSphereParam>(param, c.theorem), c.n);
    case TheoremId::kOnSphereSymmetric: {
      const auto& p = expect<SymmetricSphereParam>(param, c.theorem);
      return density_on_sphere_symmetric(p.t, p.u, c.k, c.n);
    }
  }
  throw InvalidInput("density: unknown theorem");
}

}  // namespace bpsphere
