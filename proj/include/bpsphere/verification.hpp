#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpsphere/geometry.hpp"
#include "bpsphere/measures.hpp"
#include "bpsphere/theorem.hpp"

namespace bpsphere {

class UnsupportedTheorem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IntegrandKind { kGaussianProduct, kBallIndicator, kVolumePower, kConstantOnSphere };

/// Non-negative test function of a point tuple.
///  - gaussian: product of standard normal densities of every point
///    (integrates to 1 over (R^n)^T).
///  - ball: 1 when every point lies in the closed ball of `radius`.
///  - volume-power: Vol(x)^exponent times the ball indicator of `cutoff`,
///    Vol being the simplex spanned by the tuple itself.
///  - constant: f = 1, only for the spherical formulas.
struct Integrand {
  IntegrandKind kind = IntegrandKind::kGaussianProduct;
  double radius = 1.0;
  double exponent = 1.0;
  double cutoff = 2.0;

  static Integrand gaussian() { return {}; }
  static Integrand ball(double radius) { return {IntegrandKind::kBallIndicator, radius}; }
  static Integrand volume_power(double exponent, double cutoff) {
    return {IntegrandKind::kVolumePower, 1.0, exponent, cutoff};
  }
  static Integrand constant() { return {IntegrandKind::kConstantOnSphere}; }

  double operator()(const PointTuple& x) const;
  std::string name() const;

  /// Exact value of the integral over (R^n)^T or (S^n)^T when known in
  /// closed form.
  std::optional<double> exact_integral(const TheoremConfig& config) const;

  /// Proposal tuned to this integrand's spatial scale.
  ProposalSpec default_proposal() const;

  /// Throws InvalidInput when the integrand does not fit the domain (e.g.
  /// the constant on R^n, which is not integrable).
  void validate_for(const TheoremConfig& config) const;
};

/// Parse "gaussian", "ball", "volume-power", "constant".
IntegrandKind parse_integrand(const std::string& name);

struct EstimatorOptions {
  std::uint64_t seed = 42;
  /// High bits of every stream id used by this estimate, so independent
  /// estimates (LHS vs RHS, different cases) never share draws.
  std::uint64_t stream_base = 0;
  /// Samples per substream; fixed so results do not depend on threads.
  std::uint64_t chunk_size = 8192;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct EstimatorReport {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string config;
  double wall_time = 0.0;
  /// True for a closed-form value (stderr 0, samples 0).
  bool exact = false;

  static EstimatorReport exact_value(double value, std::string config);
};

/// Importance-sampling estimate of the integral of f over (R^n)^T, or
/// (S^n)^T for the spherical formulas.
EstimatorReport estimate_lhs(const Integrand& f, const TheoremConfig& config, std::uint64_t samples,
                             const ProposalSpec& proposal, const EstimatorOptions& options);

/// Estimate of the right-hand side: mean of weight * density * f(x(param)).
EstimatorReport estimate_rhs(const TheoremConfig& config, const Integrand& f, std::uint64_t samples,
                             const ProposalSpec& proposal, const EstimatorOptions& options);

struct ComparisonVerdict {
  std::string theorem;
  std::string config;
  std::string integrand;
  EstimatorReport lhs;
  EstimatorReport rhs;
  double z_score = 0.0;
  bool pass = false;
  double threshold = 3.5;
  std::string reason;
  double wall_time = 0.0;
};

/// z = (lhs - rhs) / sqrt(se_l^2 + se_r^2); pass iff |z| <= threshold.
ComparisonVerdict compare(const EstimatorReport& lhs, const EstimatorReport& rhs, double threshold = 3.5);

/// |det| of the central-difference Jacobian of the forward map in
/// orthonormal charts. Supported (parameter dimension equals tuple
/// dimension): top-dimensional, pivoted-1, pivoted-circle with m = n - q,
/// anchored with k = m, on-sphere with k = n. Other configurations throw
/// UnsupportedTheorem.
double fd_jacobian_density(const TheoremConfig& config, const SphereParam& param, double h = 1e-5);

/// True when fd_jacobian_density supports `config`.
bool is_chart_free(const TheoremConfig& config);

/// Random tuple in general position for `config`: standard Gaussian points,
/// or uniform points of S^n for the spherical formulas.
PointTuple draw_tuple(const TheoremConfig& config, Rng& rng);

/// Random parameter point for the finite-difference oracle, redrawn until
/// it keeps a margin from degenerate simplices, r = r0 and |t| = 1.
SphereParam draw_oracle_param(const TheoremConfig& config, Rng& rng);

/// max_i |reconstruct(decompose(x))_i - x_i|.
double roundtrip_error(const TheoremConfig& config, const PointTuple& x);

struct CaseSpec {
  TheoremConfig config;
  Integrand integrand;
  std::uint64_t samples = 1000000;
  std::optional<ProposalSpec> proposal;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  double threshold = 3.5;
  unsigned threads = 0;
};

/// Runs every case; errors become failed verdicts carrying the reason.
std::vector<ComparisonVerdict> run_suite(const std::vector<CaseSpec>& cases, const SuiteOptions& options);

/// The Gaussian identities and spherical closed forms used as the
/// acceptance gate.
std::vector<CaseSpec> default_suite(std::uint64_t samples = 1000000);

}  // namespace bpsphere
