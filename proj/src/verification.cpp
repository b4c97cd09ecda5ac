#include "bpsphere/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include <Eigen/LU>

#include "bpsphere/densities.hpp"

namespace bpsphere {

namespace {

using Index = Eigen::Index;

constexpr double kPi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool inside_ball(const PointTuple& x, double radius) {
  const double r2 = radius * radius;
  return std::all_of(x.begin(), x.end(), [&](const Vector& xi) { return xi.squaredNorm() <= r2; });
}

// Running mean and sum of squared deviations.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double delta = o.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += o.m2 + delta * delta * na * nb / total;
    count += o.count;
  }
};

// Splits `samples` into fixed-size chunks, one random stream per chunk, and
// merges the chunk moments in chunk order.
template <class Draw>
Moments run_chunks(std::uint64_t samples, const EstimatorOptions& opt, Draw draw) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk_size);
  const std::uint64_t chunks = (samples + chunk - 1) / chunk;
  std::vector<Moments> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks || failed.load()) return;
      try {
        Rng rng(RandomStream{opt.seed, (opt.stream_base << 32) | c});
        const std::uint64_t count = std::min(chunk, samples - c * chunk);
        Moments m;
        for (std::uint64_t i = 0; i < count; ++i) {
          const double v = draw(rng);
          if (!std::isfinite(v)) throw std::runtime_error("estimator: non-finite sample value");
          m.add(v);
        }
        parts[c] = m;
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  Moments total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

EstimatorReport make_report(const Moments& m, std::uint64_t seed, std::string config, double wall) {
  EstimatorReport rep;
  rep.mean = m.mean;
  rep.samples = m.count;
  rep.seed = seed;
  rep.config = std::move(config);
  rep.wall_time = wall;
  if (m.count > 1) {
    const double var = m.m2 / static_cast<double>(m.count - 1);
    rep.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(m.count));
  }
  return rep;
}

Vector uniform_in_ball(int d, double radius, Rng& rng) {
  const Vector dir = sample_unit_sphere(d, rng);
  return dir * (radius * std::pow(rng.uniform(), 1.0 / d));
}

// --- finite-difference charts --------------------------------------------------

// Exponential chart of the unit sphere of a subspace around `base`.
struct SphereChart {
  Vector base;
  Matrix tangent;

  SphereChart(const Vector& u, const Frame& W) : base(u) {
    const Vector c = W.coordinates(u);
    Matrix col(c.size(), 1);
    col.col(0) = c / c.norm();
    tangent = W.basis() * orthocomplement(Frame::from_orthonormal(col, 1e-8)).basis();
  }

  int dim() const { return static_cast<int>(tangent.cols()); }

  Vector at(const Eigen::Ref<const Vector>& delta) const {
    const Vector v = tangent * delta;
    const double theta = v.norm();
    if (theta == 0.0) return base;
    return std::cos(theta) * base + (std::sin(theta) / theta) * v;
  }
};

// Rotation in span(a, b) taking unit a to unit b.
Matrix rotation_between(const Vector& a, const Vector& b) {
  const Index d = a.size();
  const double c = a.dot(b);
  const Vector s = a + b;
  return Matrix::Identity(d, d) - s * s.transpose() / (1.0 + c) + 2.0 * b * a.transpose();
}

Vector flatten(const PointTuple& x) {
  Index total = 0;
  for (const auto& xi : x) total += xi.size();
  Vector out(total);
  Index off = 0;
  for (const auto& xi : x) {
    out.segment(off, xi.size()) = xi;
    off += xi.size();
  }
  return out;
}

// Central differences of `forward` (parameter vector -> flattened tuple),
// rows optionally projected by `rows`.
template <class Forward>
double fd_determinant(int dim, double h, Forward forward, const Matrix* rows = nullptr) {
  Matrix J(dim, dim);
  Vector delta = Vector::Zero(dim);
  for (int j = 0; j < dim; ++j) {
    delta(j) = h;
    const Vector plus = forward(delta);
    delta(j) = -h;
    const Vector minus = forward(delta);
    delta(j) = 0.0;
    const Vector col = (plus - minus) / (2.0 * h);
    if (rows != nullptr) {
      J.col(j) = rows->transpose() * col;
    } else {
      if (col.size() != dim) throw UnsupportedTheorem("fd_jacobian_density: parameter and tuple dimensions differ");
      J.col(j) = col;
    }
  }
  return std::abs(J.partialPivLu().determinant());
}

template <class T>
const T& expect_param(const SphereParam& param) {
  if (const T* p = std::get_if<T>(&param)) return *p;
  throw InvalidInput("fd_jacobian_density: parameter type does not match theorem");
}

double fd_top(const CircumscribedParam& p0, int n, double h) {
  if (p0.L.subspace_dim() != n) throw UnsupportedTheorem("fd_jacobian_density: circumscribed needs k = n");
  std::vector<SphereChart> charts;
  for (const auto& ui : p0.u) charts.emplace_back(ui, p0.L);
  const int dim = n + 1 + static_cast<int>(charts.size()) * (n - 1);
  auto forward = [&](const Vector& d) {
    CircumscribedParam p = p0;
    p.z = p0.z + d.head(n);
    p.r = p0.r + d(n);
    Index off = n + 1;
    for (std::size_t i = 0; i < charts.size(); ++i) {
      p.u[i] = charts[i].at(d.segment(off, n - 1));
      off += n - 1;
    }
    return flatten(reconstruct_circumscribed(p));
  };
  return fd_determinant(dim, h, forward);
}

double fd_pivoted(const PivotedCircleParam& p0, int n, double h) {
  const int m = p0.L.subspace_dim();
  const int q = p0.Q.subspace_dim();
  if (m != n - q) throw UnsupportedTheorem("fd_jacobian_density: pivoted-circle needs m = n - q");
  const Frame W = q > 0 ? direct_sum(p0.L, p0.Q) : p0.L;
  const SphereChart zc(p0.z, p0.L);
  std::vector<SphereChart> charts;
  for (const auto& ui : p0.u) charts.emplace_back(ui, W);
  const int dz = zc.dim();
  const int du = W.subspace_dim() - 1;
  const int dim = 1 + dz + static_cast<int>(charts.size()) * du;
  auto forward = [&](const Vector& d) {
    PivotedCircleParam p = p0;
    p.r = p0.r + d(0);
    p.z = zc.at(d.segment(1, dz));
    Index off = 1 + dz;
    for (std::size_t i = 0; i < charts.size(); ++i) {
      p.u[i] = charts[i].at(d.segment(off, du));
      off += du;
    }
    return flatten(reconstruct_pivoted_circle(p));
  };
  return fd_determinant(dim, h, forward);
}

double fd_anchored(const AnchoredParam& p0, int n, double h) {
  const Frame& B = p0.F.direction;
  const int m = B.subspace_dim();
  const int k = static_cast<int>(p0.u.size()) - 1;
  if (k != m) throw UnsupportedTheorem("fd_jacobian_density: anchored needs k = m");
  const Frame W = direct_sum(p0.P, orthocomplement(B));
  std::vector<SphereChart> charts;
  for (const auto& ui : p0.u) charts.emplace_back(ui, W);
  const int du = W.subspace_dim() - 1;
  const int dim = m + 1 + static_cast<int>(charts.size()) * du;
  auto forward = [&](const Vector& d) {
    AnchoredParam p = p0;
    p.z = p0.z + B.embed(d.head(m));
    p.r = p0.r + d(m);
    Index off = m + 1;
    for (std::size_t i = 0; i < charts.size(); ++i) {
      p.u[i] = charts[i].at(d.segment(off, du));
      off += du;
    }
    return flatten(reconstruct_anchored(p));
  };
  (void)n;
  return fd_determinant(dim, h, forward);
}

// k = n on S^n: the hyperplane sigma is charted by its unit normal nu and p
// by t = <p, nu>. (nu, t) and (-nu, -t) give the same hyperplane and point,
// a local isometry onto the parameter space, so |det| is the density itself.
double fd_on_sphere(const SphereOnSphereParam& p0, int n, double h) {
  if (p0.sigma.subspace_dim() != n) throw UnsupportedTheorem("fd_jacobian_density: on-sphere needs k = n");
  const Vector nu0 = orthocomplement(p0.sigma).vector(0);
  const double t0 = p0.p.dot(nu0);
  const SphereChart nuc(nu0, Frame::identity(n + 1));
  std::vector<SphereChart> charts;
  for (const auto& ui : p0.u) charts.emplace_back(ui, p0.sigma);
  const int du = n - 1;
  const int dim = n + 1 + static_cast<int>(charts.size()) * du;
  auto forward = [&](const Vector& d) {
    const Vector nu = nuc.at(d.head(n));
    const double t = t0 + d(n);
    const double R = std::sqrt(std::max(0.0, 1.0 - t * t));
    const Matrix rot = rotation_between(nu0, nu);
    PointTuple x;
    Index off = n + 1;
    for (const auto& chart : charts) {
      x.push_back(t * nu + R * (rot * chart.at(d.segment(off, du))));
      off += du;
    }
    return flatten(x);
  };
  // Rows: an orthonormal tangent basis of S^n at every base point.
  const PointTuple x0 = reconstruct_on_sphere(p0);
  const int d1 = n + 1;
  Matrix rows = Matrix::Zero(d1 * static_cast<Index>(x0.size()), dim);
  Index col = 0;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    const SphereChart tc(x0[i], Frame::identity(d1));
    rows.block(static_cast<Index>(i) * d1, col, d1, n) = tc.tangent;
    col += n;
  }
  if (col != dim) throw UnsupportedTheorem("fd_jacobian_density: parameter and tuple dimensions differ");
  return fd_determinant(dim, h, forward, &rows);
}

}  // namespace

// --- integrands ------------------------------------------------------------------

double Integrand::operator()(const PointTuple& x) const {
  switch (kind) {
    case IntegrandKind::kGaussianProduct: {
      double s = 0.0;
      Index dims = 0;
      for (const auto& xi : x) {
        s += xi.squaredNorm();
        dims += xi.size();
      }
      return std::exp(-0.5 * s - 0.5 * static_cast<double>(dims) * std::log(2.0 * kPi));
    }
    case IntegrandKind::kBallIndicator:
      return inside_ball(x, radius) ? 1.0 : 0.0;
    case IntegrandKind::kVolumePower:
      if (!inside_ball(x, cutoff)) return 0.0;
      return std::pow(simplex_volume(x), exponent);
    case IntegrandKind::kConstantOnSphere:
      return 1.0;
  }
  return 0.0;
}

std::string Integrand::name() const {
  std::ostringstream os;
  switch (kind) {
    case IntegrandKind::kGaussianProduct:
      return "gaussian";
    case IntegrandKind::kBallIndicator:
      os << "ball(radius=" << radius << ")";
      return os.str();
    case IntegrandKind::kVolumePower:
      os << "volume-power(exponent=" << exponent << ",cutoff=" << cutoff << ")";
      return os.str();
    case IntegrandKind::kConstantOnSphere:
      return "constant";
  }
  return "unknown";
}

std::optional<double> Integrand::exact_integral(const TheoremConfig& config) const {
  const int T = config.tuple_size();
  const int n = config.n;
  if (config.on_sphere()) {
    const double area = sphere_surface_area(n + 1);
    switch (kind) {
      case IntegrandKind::kGaussianProduct:
        return std::pow(area * std::pow(2.0 * kPi, -0.5 * (n + 1)) * std::exp(-0.5), T);
      case IntegrandKind::kBallIndicator:
        return radius >= 1.0 ? std::pow(area, T) : 0.0;
      case IntegrandKind::kConstantOnSphere:
        return std::pow(area, T);
      case IntegrandKind::kVolumePower:
        return std::nullopt;
    }
  }
  switch (kind) {
    case IntegrandKind::kGaussianProduct:
      return 1.0;
    case IntegrandKind::kBallIndicator:
      return std::pow(ball_volume(n) * std::pow(radius, n), T);
    default:
      return std::nullopt;
  }
}

ProposalSpec Integrand::default_proposal() const {
  ProposalSpec spec;
  if (kind == IntegrandKind::kBallIndicator) spec.center_scale = 0.6 * radius;
  if (kind == IntegrandKind::kVolumePower) spec.center_scale = 0.6 * cutoff;
  return spec;
}

void Integrand::validate_for(const TheoremConfig& config) const {
  if (kind == IntegrandKind::kConstantOnSphere && !config.on_sphere())
    throw InvalidInput("integrand: the constant is only integrable on the sphere");
  if (kind == IntegrandKind::kBallIndicator && !(radius > 0.0)) throw InvalidInput("integrand: radius must be positive");
  if (kind == IntegrandKind::kVolumePower && !(cutoff > 0.0 && exponent >= 0.0))
    throw InvalidInput("integrand: need cutoff > 0 and exponent >= 0");
}

IntegrandKind parse_integrand(const std::string& name) {
  if (name == "gaussian") return IntegrandKind::kGaussianProduct;
  if (name == "ball") return IntegrandKind::kBallIndicator;
  if (name == "volume-power") return IntegrandKind::kVolumePower;
  if (name == "constant") return IntegrandKind::kConstantOnSphere;
  throw InvalidInput("unknown integrand '" + name + "'");
}

// --- estimators --------------------------------------------------------------------

EstimatorReport EstimatorReport::exact_value(double value, std::string config) {
  EstimatorReport rep;
  rep.mean = value;
  rep.config = std::move(config);
  rep.exact = true;
  return rep;
}

EstimatorReport estimate_lhs(const Integrand& f, const TheoremConfig& config, std::uint64_t samples,
                             const ProposalSpec& proposal, const EstimatorOptions& options) {
  config.validate();
  f.validate_for(config);
  proposal.validate();
  if (samples < 2) throw InvalidInput("estimate_lhs: need at least 2 samples");
  const auto start = std::chrono::steady_clock::now();
  const int T = config.tuple_size();
  const int d = config.point_dim();
  Moments m;

  if (config.on_sphere()) {
    const double weight = std::pow(sphere_surface_area(d), T);
    m = run_chunks(samples, options, [&](Rng& rng) {
      PointTuple x(T);
      for (auto& xi : x) xi = sample_unit_sphere(d, rng);
      return weight * f(x);
    });
  } else if (f.kind == IntegrandKind::kGaussianProduct) {
    const double s = proposal.center_scale;
    m = run_chunks(samples, options, [&](Rng& rng) {
      PointTuple x(T);
      double log_q = 0.0;
      for (auto& xi : x) {
        xi = rng.normal_vector(d) * s;
        log_q += -0.5 * d * std::log(2.0 * kPi * s * s) - 0.5 * xi.squaredNorm() / (s * s);
      }
      const double fx = f(x);
      return fx == 0.0 ? 0.0 : std::exp(std::log(fx) - log_q);
    });
  } else {
    const double radius = f.kind == IntegrandKind::kBallIndicator ? f.radius : f.cutoff;
    const double weight = std::pow(ball_volume(d) * std::pow(radius, d), T);
    m = run_chunks(samples, options, [&](Rng& rng) {
      PointTuple x(T);
      for (auto& xi : x) xi = uniform_in_ball(d, radius, rng);
      return weight * f(x);
    });
  }
  return make_report(m, options.seed, config.describe(), seconds_since(start));
}

EstimatorReport estimate_rhs(const TheoremConfig& config, const Integrand& f, std::uint64_t samples,
                             const ProposalSpec& proposal, const EstimatorOptions& options) {
  config.validate();
  f.validate_for(config);
  proposal.validate();
  if (samples < 2) throw InvalidInput("estimate_rhs: need at least 2 samples");
  const auto start = std::chrono::steady_clock::now();
  const Moments m = run_chunks(samples, options, [&](Rng& rng) {
    const WeightedParam wp = sample_param(config, proposal, rng);
    if (wp.weight == 0.0) return 0.0;
    const double fx = f(reconstruct(wp.param));
    if (fx == 0.0) return 0.0;
    const double dens = density(config, wp.param);
    if (dens == 0.0) return 0.0;
    return wp.weight * dens * fx;
  });
  return make_report(m, options.seed, config.describe(), seconds_since(start));
}

ComparisonVerdict compare(const EstimatorReport& lhs, const EstimatorReport& rhs, double threshold) {
  ComparisonVerdict v;
  v.config = rhs.config;
  v.lhs = lhs;
  v.rhs = rhs;
  v.threshold = threshold;
  const double diff = lhs.mean - rhs.mean;
  const double se = std::hypot(lhs.std_error, rhs.std_error);
  if (se > 0.0) {
    v.z_score = diff / se;
  } else if (diff == 0.0) {
    v.z_score = 0.0;
  } else {
    v.z_score = diff > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  v.pass = std::abs(v.z_score) <= threshold;
  if (!v.pass) {
    std::ostringstream os;
    os << "|z| = " << std::abs(v.z_score) << " exceeds " << threshold;
    v.reason = os.str();
  }
  v.wall_time = lhs.wall_time + rhs.wall_time;
  return v;
}

// --- finite-difference oracle ------------------------------------------------------

bool is_chart_free(const TheoremConfig& c) {
  switch (c.theorem) {
    case TheoremId::kTopDimensional:
    case TheoremId::kPivoted1:
      return true;
    case TheoremId::kCircumscribed:
      return c.k == c.n;
    case TheoremId::kPivoted2:
      return c.m == c.n;
    case TheoremId::kPivotedCircle:
      return c.m == c.n - c.q;
    case TheoremId::kAnchored:
      return c.k == c.m;
    case TheoremId::kOnSphere:
      return c.k == c.n;
    default:
      return false;
  }
}

double fd_jacobian_density(const TheoremConfig& config, const SphereParam& param, double h) {
  config.validate();
  if (!is_chart_free(config))
    throw UnsupportedTheorem("fd_jacobian_density: " + config.describe() + " has a Grassmannian factor");
  if (!(h > 0.0)) throw InvalidInput("fd_jacobian_density: step must be positive");
  switch (config.theorem) {
    case TheoremId::kTopDimensional:
    case TheoremId::kCircumscribed:
      return fd_top(expect_param<CircumscribedParam>(param), config.n, h);
    case TheoremId::kPivoted1:
    case TheoremId::kPivoted2:
    case TheoremId::kPivotedCircle:
      return fd_pivoted(expect_param<PivotedCircleParam>(param), config.n, h);
    case TheoremId::kAnchored:
      return fd_anchored(expect_param<AnchoredParam>(param), config.n, h);
    case TheoremId::kOnSphere:
      return fd_on_sphere(expect_param<SphereOnSphereParam>(param), config.n, h);
    default:
      break;
  }
  throw UnsupportedTheorem("fd_jacobian_density: unsupported theorem");
}

// --- random test inputs -------------------------------------------------------------

PointTuple draw_tuple(const TheoremConfig& config, Rng& rng) {
  config.validate();
  const int d = config.point_dim();
  for (;;) {
    PointTuple x(config.tuple_size());
    for (auto& xi : x) xi = config.on_sphere() ? sample_unit_sphere(d, rng) : rng.normal_vector(d);
    if (x.size() < 2 || !is_degenerate(x)) return x;
  }
}

SphereParam draw_oracle_param(const TheoremConfig& config, Rng& rng) {
  ProposalSpec spec;
  spec.cluster_fraction = 0.0;
  constexpr double kMinVolume = 0.1;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    WeightedParam wp = sample_param(config, spec, rng);
    bool ok = true;
    if (auto* p = std::get_if<CircumscribedParam>(&wp.param)) {
      ok = p->r > 0.3 && p->r < 5.0 && parallelotope_volume(p->u) > kMinVolume;
    } else if (auto* p = std::get_if<PivotedCircleParam>(&wp.param)) {
      const double rs = p->rstar();
      ok = p->r < 5.0 && rs > 0.2 && parallelotope_volume(p->u, Vector(-(rs / p->r) * p->z)) > kMinVolume;
    } else if (auto* p = std::get_if<AnchoredParam>(&wp.param)) {
      PointTuple up;
      for (const auto& ui : p->u) up.push_back(project_onto(p->P, ui));
      ok = p->r > 0.3 && p->r < 5.0 && (up.size() < 2 || parallelotope_volume(up) > kMinVolume);
    } else if (auto* p = std::get_if<SphereOnSphereParam>(&wp.param)) {
      ok = p->R() > 0.3 && parallelotope_volume(p->u) > kMinVolume;
    }
    if (ok) return std::move(wp.param);
  }
  throw std::runtime_error("draw_oracle_param: no admissible parameter found");
}

double roundtrip_error(const TheoremConfig& config, const PointTuple& x) {
  const PointTuple y = reconstruct(decompose(config, x));
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, (y[i] - x[i]).cwiseAbs().maxCoeff());
  return err;
}

// --- suites --------------------------------------------------------------------------

std::vector<ComparisonVerdict> run_suite(const std::vector<CaseSpec>& cases, const SuiteOptions& options) {
  std::vector<ComparisonVerdict> out;
  out.reserve(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseSpec& cs = cases[i];
    const auto start = std::chrono::steady_clock::now();
    ComparisonVerdict v;
    try {
      cs.config.validate();
      cs.integrand.validate_for(cs.config);
      const ProposalSpec proposal = cs.proposal.value_or(cs.integrand.default_proposal());
      EstimatorOptions eo;
      eo.seed = options.seed;
      eo.threads = options.threads;

      EstimatorReport lhs;
      if (const auto exact = cs.integrand.exact_integral(cs.config)) {
        lhs = EstimatorReport::exact_value(*exact, cs.config.describe());
        lhs.seed = options.seed;
      } else {
        eo.stream_base = 2 * i + 1;
        lhs = estimate_lhs(cs.integrand, cs.config, cs.samples, proposal, eo);
      }
      eo.stream_base = 2 * i;
      const EstimatorReport rhs = estimate_rhs(cs.config, cs.integrand, cs.samples, proposal, eo);
      v = compare(lhs, rhs, options.threshold);
    } catch (const std::exception& e) {
      v.pass = false;
      v.threshold = options.threshold;
      v.z_score = std::numeric_limits<double>::quiet_NaN();
      v.reason = e.what();
    }
    v.theorem = std::string(theorem_name(cs.config.theorem));
    v.config = cs.config.describe();
    v.integrand = cs.integrand.name();
    v.wall_time = seconds_since(start);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CaseSpec> default_suite(std::uint64_t samples) {
  using T = TheoremId;
  std::vector<CaseSpec> cases;
  auto add = [&](TheoremConfig c, Integrand f = Integrand::gaussian()) {
    cases.push_back(CaseSpec{std::move(c), f, samples, std::nullopt});
  };
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}})
    add(TheoremConfig::make(T::kCircumscribed, n, k));
  for (int n : {1, 2, 3}) add(TheoremConfig::make(T::kTopDimensional, n));
  for (int n : {2, 3}) add(TheoremConfig::make(T::kPivoted1, n));
  for (auto [n, m] : {std::pair{3, 2}, {4, 2}}) add(TheoremConfig::make(T::kPivoted2, n, 1, m));
  struct Circle {
    int n, m, q;
    double r0;
  };
  for (const Circle& c : {Circle{3, 2, 1, 1.0}, Circle{4, 2, 1, 0.5}, Circle{3, 1, 1, 1.0}})
    add(TheoremConfig::make(T::kPivotedCircle, c.n, 1, c.m, c.q, c.r0));
  for (auto [n, m, k] : {std::tuple{3, 2, 1}, {3, 2, 2}, {4, 3, 2}}) add(TheoremConfig::make(T::kAnchored, n, k, m));
  for (auto [n, k] : {std::pair{3, 1}, {3, 2}}) add(TheoremConfig::make(T::kAffineBP, n, k));
  for (auto [n, k] : {std::pair{3, 1}, {3, 2}}) add(TheoremConfig::make(T::kLinearBP, n, k));
  for (T t : {T::kOnSphere, T::kOnSphereSymmetric})
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}}) add(TheoremConfig::make(t, n, k), Integrand::constant());
  return cases;
}

}  // namespace bpsphere
