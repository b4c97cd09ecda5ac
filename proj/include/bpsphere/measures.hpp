#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "bpsphere/geometry.hpp"
#include "bpsphere/theorem.hpp"

namespace bpsphere {

// --- constants -----------------------------------------------------------------

/// sigma_n = 2 pi^{n/2} / Gamma(n/2), the total measure of S^{n-1}.
double sphere_surface_area(int n);

/// Lebesgue volume of the unit ball in R^d (1 for d = 0).
double ball_volume(int d);

/// ||G(k,n)|| = (sigma_n ... sigma_{n-k+1}) / (sigma_1 ... sigma_k).
/// Evaluated with min(k, n-k) factors, so duality holds bit for bit.
double grassmannian_measure(int k, int n);

/// k!, exact table up to 20 and exp(lgamma) beyond.
double factorial(int k);

// --- random streams --------------------------------------------------------------

/// Identifies a reproducible substream: equal (seed, stream_id) pairs give
/// equal draw sequences.
struct RandomStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

class Rng {
 public:
  explicit Rng(RandomStream stream);

  double uniform();  // [0, 1)
  double normal();
  double gamma(double shape, double scale);
  Vector normal_vector(int dim);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Uniform point of S^{dim-1}; dim = 1 gives +-1.
Vector sample_unit_sphere(int dim, Rng& rng);

/// Frame whose span is rotation-invariantly distributed on G(k,n).
Frame sample_frame(int k, int n, Rng& rng);

// --- proposals ----------------------------------------------------------------------

struct HalfNormalLaw {
  double scale = 1.0;
};
struct GammaLaw {
  double shape = 2.0;
  double scale = 1.0;
};
struct UniformLaw {
  double rmax = 5.0;
};
/// Density proportional to r^{dof-1} exp(-r^2 / (2 scale^2)).
struct ChiLaw {
  double dof = 1.0;
  double scale = 1.0;
};
/// Radius and centre drawn conditionally on the sampled directions so that
/// a Gaussian integrand of the proposal's scale is matched exactly.
struct AutoLaw {};

using RadialLaw = std::variant<AutoLaw, HalfNormalLaw, GammaLaw, UniformLaw, ChiLaw>;

/// Draw / density for the independent radial laws.
double sample_radial(const RadialLaw& law, Rng& rng);
double radial_log_density(const RadialLaw& law, double r);

struct ProposalSpec {
  RadialLaw radial = AutoLaw{};
  /// Standard deviation of the centre proposal (and, under AutoLaw, the
  /// Gaussian scale the proposal is matched to).
  double center_scale = 1.0;
  /// Mixture weight of the clustered component for sphere directions.
  double cluster_fraction = 0.5;
  /// Power of the geodesic angle in the clustered component, in (-1, 0].
  double cluster_exponent = -0.6;

  /// Throws InvalidInput on non-positive scales or out-of-range mixture
  /// parameters.
  void validate() const;
};

struct WeightedParam {
  SphereParam param;
  /// 1 / proposal density, with all compact-factor masses folded in.
  double weight = 0.0;
};

/// Draws every factor of the theorem's parameter space. For any integrable
/// g, E[weight * g(param)] equals the integral of g over the parameter
/// space with the measure used on the right-hand side of the formula.
WeightedParam sample_param(const TheoremConfig& config, const ProposalSpec& proposal, Rng& rng);

}  // namespace bpsphere
