#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bpsphere/geometry.hpp"

namespace bpsphere {

enum class TheoremId {
  kLinearBP,
  kAffineBP,
  kCircumscribed,
  kTopDimensional,
  kPivoted1,
  kPivoted2,
  kPivotedCircle,
  kAnchored,
  kOnSphere,
  kOnSphereSymmetric,
};

/// Kebab-case name, e.g. "pivoted-circle".
std::string_view theorem_name(TheoremId id);
/// Inverse of theorem_name; throws InvalidInput for unknown names.
TheoremId parse_theorem(std::string_view name);

/// Rotationally symmetric form on the sphere: t = R^2, u a simplex on the
/// unit sphere of R^k. Points are p + sqrt(t) u with u embedded in the
/// first k coordinates of R^{n+1} and p = sqrt(1 - t) e_{k+1}.
struct SymmetricSphereParam {
  double t = 0.0;
  PointTuple u;
  int n = 0;
};

using SphereParam = std::variant<LinearParam, AffineParam, CircumscribedParam, PivotedCircleParam, AnchoredParam,
                                 SphereOnSphereParam, SymmetricSphereParam>;

/// Dimensions and fixed data of one formula instance. Unused fields are
/// ignored by theorems that do not need them.
struct TheoremConfig {
  TheoremId theorem = TheoremId::kCircumscribed;
  int n = 2;
  int k = 1;
  int m = 1;
  int q = 0;
  double r0 = 0.0;
  /// Fixed q-plane of the pivoted-circle formula; defaults to the last q
  /// coordinate axes.
  std::optional<Frame> Q;
  /// Anchor flat of the anchored formula; defaults to span(e_1..e_m).
  std::optional<AffineFlat> F;

  /// Throws InvalidInput when the dimensions violate the theorem's
  /// constraints.
  void validate() const;

  /// Number of points in the tuple x.
  int tuple_size() const;
  /// Dimension of each point (n, or n+1 for the spherical formulas).
  int point_dim() const;
  bool on_sphere() const;

  Frame fixed_Q() const;
  AffineFlat anchor_flat() const;

  /// Canonical configuration for a theorem; sets the dimensions relevant
  /// to it and normalises the rest (e.g. k = n for top-dimensional).
  static TheoremConfig make(TheoremId theorem, int n, int k = 1, int m = 1, int q = 0, double r0 = 0.0);

  /// Short description used in reports, e.g. "circumscribed n=3 k=2".
  std::string describe() const;
};

/// Maps a parameter point back to the point tuple x.
PointTuple reconstruct(const SphereParam& param);

/// Parameter point of the tuple x under `config`'s map. Throws
/// DegenerateInput on degenerate tuples and InvalidInput for the symmetric
/// spherical form, which is not a pointwise change of variables.
SphereParam decompose(const TheoremConfig& config, const PointTuple& x);

}  // namespace bpsphere
