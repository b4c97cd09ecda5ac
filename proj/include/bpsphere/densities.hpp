#pragma once

#include "bpsphere/geometry.hpp"
#include "bpsphere/theorem.hpp"

namespace bpsphere {

// Closed-form Jacobian weights. All return non-negative values; a
// degenerate simplex gives 0, and a power with exponent exactly 0 counts
// as absent (0^0 = 1).

/// [k! Vol_k(0, u)]^{n-k} for k points u in a linear k-plane.
double density_linear_bp(const PointTuple& u, int k, int n);

/// [k! Vol_k(u)]^{n-k} for k+1 points u in a linear k-plane.
double density_affine_bp(const PointTuple& u, int k, int n);

/// r^{nk-1} [k! Vol_k(u)]^{n-k+1}, k = #u - 1.
double density_circumscribed(const CircumscribedParam& p, int n);

/// r^{n^2-1} n! Vol_n(u) for n+1 unit vectors of R^n.
double density_top(double r, const PointTuple& u, int n);

/// r^{n^2-1} n! Vol_n(-z, u) for n unit vectors u and unit z in R^n.
double density_pivoted_first(double r, const Vector& z, const PointTuple& u, int n);

/// r^{mn-1} [m! Vol_m(-z, u)]^{n-m+1} for m unit vectors u in an m-plane.
double density_pivoted_second(double r, const Vector& z, const PointTuple& u, int n);

/// Spheres containing the circle S(0, r0, Q):
///   r^{m(n-1)+1} (r^2 - r0^2)^{(m-2)/2} [m! Vol_m(-(r*/r) z, u^L)]^{n-q-m+1}.
/// Throws InvalidInput when r < r0.
double density_pivoted(const PivotedCircleParam& p, int n);

/// r^{n(k+1)-(m+1)} [k! Vol_k(u^P)]^{m-k+1}, m = dim of the anchor flat.
double density_anchored(const AnchoredParam& p, int n);

/// R^{kn-2} [k! Vol_k(u)]^{n-k+1} on S^n.
double density_on_sphere(const SphereOnSphereParam& p, int n);

/// t^{(kn-2)/2} (1-t)^{(n-k-1)/2} [k! Vol_k(u)]^{n-k+1}, u in (S^{k-1})^{k+1}.
/// Throws InvalidInput for t outside [0, 1].
double density_on_sphere_symmetric(double t, const PointTuple& u, int k, int n);

/// (sigma_{n+1} / 2) ||G(k,n)||, the constant in front of the t-integral.
double on_sphere_symmetric_prefactor(int k, int n);

/// Dispatches to the density of `config.theorem`. The parameter must be the
/// variant alternative that theorem uses.
double density(const TheoremConfig& config, const SphereParam& param);

}  // namespace bpsphere
