#include "bpsphere/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace bpsphere {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-300;

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

double log_normal_density(const Vector& centered, double scale) {
  const double d = static_cast<double>(centered.size());
  return -0.5 * d * std::log(2.0 * kPi * scale * scale) - 0.5 * centered.squaredNorm() / (scale * scale);
}

Vector gaussian_in(const Frame& frame, Rng& rng) { return frame.embed(rng.normal_vector(frame.subspace_dim())); }

// Orthonormal frame of span(W) minus span(P), P inside span(W).
Frame embed_in(const Frame& W, const Frame& P) {
  Matrix coords = W.basis().transpose() * P.basis();
  const Frame inner = orthocomplement(Frame::from_orthonormal(coords, 1e-8));
  return Frame::from_orthonormal(W.basis() * inner.basis());
}

// Directions on the unit sphere of span(W): uniform, or a power-law cap in
// the geodesic angle around a given centre.
class DirectionSampler {
 public:
  // `band`, when given, is a subspace P of span(W): clustered anchors are
  // then drawn half of the time near the unit sphere of P.
  DirectionSampler(const Frame& W, const ProposalSpec& spec, const Frame* band = nullptr)
      : W_(W),
        dim_(W.subspace_dim()),
        log_area_(std::log(sphere_surface_area(W.subspace_dim()))),
        gamma_(spec.cluster_exponent),
        alpha_(dim_ >= 2 ? spec.cluster_fraction : 0.0) {
    if (dim_ >= 2) {
      log_cap_norm_ = std::log(gamma_ + 1.0) - (gamma_ + 1.0) * std::log(kPi) -
                      std::log(sphere_surface_area(dim_ - 1));
    }
    if (band != nullptr && band->subspace_dim() >= 1 && band->subspace_dim() < dim_ && alpha_ > 0.0) {
      band_ = band;
      band_perp_ = embed_in(W_, *band);
      const int p = band->subspace_dim();
      const int f = dim_ - p;
      log_band_norm_ = std::log(gamma_ + 1.0) - (gamma_ + 1.0) * std::log(0.5 * kPi) -
                       std::log(sphere_surface_area(p)) - std::log(sphere_surface_area(f));
    }
  }

  double cluster_fraction() const { return alpha_; }

  Vector uniform(Rng& rng) const { return W_.embed(sample_unit_sphere(dim_, rng)); }

  Vector cap(const Vector& center, Rng& rng) const {
    const double psi = kPi * std::pow(rng.uniform(), 1.0 / (gamma_ + 1.0));
    Vector g = gaussian_in(W_, rng);
    g -= g.dot(center) * center;
    const double gn = g.norm();
    if (!(gn > 0.0)) return center;
    return std::cos(psi) * center + std::sin(psi) * (g / gn);
  }

  double log_uniform_density() const { return -log_area_; }

  double log_cap_density(const Vector& u, const Vector& center) const {
    const double chord = std::min(2.0, (u - center).norm());
    const double psi = std::max(2.0 * std::asin(0.5 * chord), kTiny);
    double lp = log_cap_norm_ + gamma_ * std::log(psi);
    if (dim_ > 2) lp -= (dim_ - 2) * std::log(std::max(std::sin(psi), kTiny));
    return lp;
  }

  // Join coordinates u = cos(theta) a + sin(theta) b, a in S(P), b in the
  // unit sphere of the complement, theta with density ~ theta^gamma.
  Vector band_point(Rng& rng) const {
    const double theta = 0.5 * kPi * std::pow(rng.uniform(), 1.0 / (gamma_ + 1.0));
    const Vector a = band_->embed(sample_unit_sphere(band_->subspace_dim(), rng));
    const Vector b = band_perp_.embed(sample_unit_sphere(band_perp_.subspace_dim(), rng));
    return std::cos(theta) * a + std::sin(theta) * b;
  }

  double log_band_density(const Vector& u) const {
    const double along = project_onto(*band_, u).norm();
    const double across = project_onto(band_perp_, u).norm();
    const double theta = std::max(std::atan2(across, along), kTiny);
    const int p = band_->subspace_dim();
    const int f = dim_ - p;
    double lp = log_band_norm_ + gamma_ * std::log(theta);
    if (p > 1) lp -= (p - 1) * std::log(std::max(std::cos(theta), kTiny));
    if (f > 1) lp -= (f - 1) * std::log(std::max(std::sin(theta), kTiny));
    return lp;
  }

  Vector anchor(Rng& rng) const {
    if (band_ != nullptr && rng.uniform() < 0.5) return band_point(rng);
    return uniform(rng);
  }

  double log_anchor_density(const Vector& u) const {
    if (band_ == nullptr) return log_uniform_density();
    return std::log(0.5) + log_sum_exp(log_uniform_density(), log_band_density(u));
  }

  // u_i all uniform, or (with probability alpha) one anchor and the rest in
  // caps around it.
  PointTuple sample_mutual(int count, Rng& rng) const {
    PointTuple u(count);
    if (alpha_ > 0.0 && rng.uniform() < alpha_) {
      const int anchor_index = std::min(count - 1, static_cast<int>(rng.uniform() * count));
      u[anchor_index] = anchor(rng);
      for (int i = 0; i < count; ++i)
        if (i != anchor_index) u[i] = cap(u[anchor_index], rng);
    } else {
      for (auto& ui : u) ui = uniform(rng);
    }
    return u;
  }

  double log_mutual_density(const PointTuple& u) const {
    const int count = static_cast<int>(u.size());
    const double log_unif = count * log_uniform_density();
    if (alpha_ <= 0.0) return log_unif;
    double log_cl = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < count; ++j) {
      double lj = log_anchor_density(u[j]);
      for (int i = 0; i < count; ++i)
        if (i != j) lj += log_cap_density(u[i], u[j]);
      log_cl = log_sum_exp(log_cl, lj);
    }
    log_cl -= std::log(static_cast<double>(count));
    return log_sum_exp(std::log1p(-alpha_) + log_unif, std::log(alpha_) + log_cl);
  }

  // u_i all uniform, or (with probability alpha) all in caps around `pole`.
  PointTuple sample_around(const Vector& pole, int count, Rng& rng) const {
    PointTuple u(count);
    const bool clustered = alpha_ > 0.0 && rng.uniform() < alpha_;
    for (auto& ui : u) ui = clustered ? cap(pole, rng) : uniform(rng);
    return u;
  }

  double log_around_density(const PointTuple& u, const Vector& pole) const {
    const double log_unif = static_cast<double>(u.size()) * log_uniform_density();
    if (alpha_ <= 0.0) return log_unif;
    double log_cl = 0.0;
    for (const auto& ui : u) log_cl += log_cap_density(ui, pole);
    return log_sum_exp(std::log1p(-alpha_) + log_unif, std::log(alpha_) + log_cl);
  }

 private:
  const Frame& W_;
  int dim_;
  double log_area_;
  double gamma_;
  double alpha_;
  double log_cap_norm_ = 0.0;
  const Frame* band_ = nullptr;
  Frame band_perp_;
  double log_band_norm_ = 0.0;
};

Vector mean_of(const PointTuple& u) {
  Vector s = Vector::Zero(u.front().size());
  for (const auto& ui : u) s += ui;
  return s / static_cast<double>(u.size());
}

struct RadialDraw {
  double r;
  double log_density;
};

// r >= 0 from an explicit law, or a chi law for AutoLaw.
RadialDraw draw_radius(const ProposalSpec& spec, const ChiLaw& auto_law, Rng& rng) {
  const RadialLaw law = std::holds_alternative<AutoLaw>(spec.radial) ? RadialLaw{auto_law} : spec.radial;
  const double r = sample_radial(law, rng);
  return {r, radial_log_density(law, r)};
}

// r >= r0 via r* = sqrt(r^2 - r0^2) drawn from `law`; dr*/dr = r / r*.
RadialDraw draw_shifted_radius(const RadialLaw& law, double r0, Rng& rng) {
  const double rs = sample_radial(law, rng);
  const double r = std::hypot(r0, rs);
  const double log_jac = (r0 > 0.0) ? std::log(r) - std::log(std::max(rs, kTiny)) : 0.0;
  return {r, radial_log_density(law, rs) + log_jac};
}

// Pareto type II with shape 1: density 1 / (s (1 + r/s)^2) on r >= 0.
double sample_lomax(double scale, Rng& rng) {
  const double v = rng.uniform();
  return scale * v / (1.0 - v);
}

double log_lomax_density(double scale, double r) { return -std::log(scale) - 2.0 * std::log1p(r / scale); }

Frame embed_frame(const Frame& outer, const Frame& inner) {
  return Frame::from_orthonormal(outer.basis() * inner.basis());
}

// --- per-theorem samplers --------------------------------------------------------

WeightedParam sample_linear(const TheoremConfig& c, const ProposalSpec& spec, Rng& rng) {
  LinearParam p;
  p.L = sample_frame(c.k, c.n, rng);
  double log_q = 0.0;
  for (int i = 0; i < c.k; ++i) {
    const Vector coords = rng.normal_vector(c.k) * spec.center_scale;
    log_q += log_normal_density(coords, spec.center_scale);
    p.u.push_back(p.L.embed(coords));
  }
  const double w = grassmannian_measure(c.k, c.n) * std::exp(-log_q);
  return {std::move(p), w};
}

WeightedParam sample_affine(const TheoremConfig& c, const ProposalSpec& spec, Rng& rng) {
  AffineParam p;
  p.L = sample_frame(c.k, c.n, rng);
  const Frame perp = orthocomplement(p.L);
  const bool matched = std::holds_alternative<AutoLaw>(spec.radial);
  const double h_scale = matched ? spec.center_scale / std::sqrt(c.k + 1.0) : spec.center_scale;
  const Vector h_coords = rng.normal_vector(perp.subspace_dim()) * h_scale;
  double log_q = log_normal_density(h_coords, h_scale);
  p.h = perp.embed(h_coords);
  for (int i = 0; i <= c.k; ++i) {
    const Vector coords = rng.normal_vector(c.k) * spec.center_scale;
    log_q += log_normal_density(coords, spec.center_scale);
    p.u.push_back(p.L.embed(coords));
  }
  const double w = grassmannian_measure(c.k, c.n) * std::exp(-log_q);
  return {std::move(p), w};
}

WeightedParam sample_circumscribed(const TheoremConfig& c, const ProposalSpec& spec, Rng& rng) {
  const int n = c.n;
  const int k = c.theorem == TheoremId::kTopDimensional ? n : c.k;
  CircumscribedParam p;
  p.L = (k == n) ? Frame::identity(n) : sample_frame(k, n, rng);
  const DirectionSampler dirs(p.L, spec);
  p.u = dirs.sample_mutual(k + 1, rng);
  double log_q = dirs.log_mutual_density(p.u);

  const double s = spec.center_scale;
  if (std::holds_alternative<AutoLaw>(spec.radial)) {
    const Vector ubar = mean_of(p.u);
    const double A = std::max((k + 1.0) * (1.0 - ubar.squaredNorm()), 1e-12 * (k + 1.0));
    const RadialDraw rd = draw_radius(spec, ChiLaw{static_cast<double>(n * k), s / std::sqrt(A)}, rng);
    p.r = rd.r;
    const double zs = s / std::sqrt(k + 1.0);
    const Vector dz = rng.normal_vector(n) * zs;
    p.z = dz - p.r * ubar;
    log_q += rd.log_density + log_normal_density(dz, zs);
  } else {
    const RadialDraw rd = draw_radius(spec, ChiLaw{}, rng);
    p.r = rd.r;
    p.z = rng.normal_vector(n) * s;
    log_q += rd.log_density + log_normal_density(p.z, s);
  }
  const double w = grassmannian_measure(k, n) * std::exp(-log_q);
  return {std::move(p), w};
}

WeightedParam sample_pivoted(const TheoremConfig& c, const ProposalSpec& spec, Rng& rng) {
  const int n = c.n;
  const int m = c.theorem == TheoremId::kPivoted1 ? n : c.m;
  const bool general = c.theorem == TheoremId::kPivotedCircle;
  const int q = general ? c.q : 0;
  const double r0 = general ? c.r0 : 0.0;

  PivotedCircleParam p;
  p.Q = general ? c.fixed_Q() : Frame::empty(n);
  p.r0 = r0;
  const Frame qperp = orthocomplement(p.Q);
  p.L = (m == n - q) ? qperp : embed_frame(qperp, sample_frame(m, n - q, rng));
  const Frame W = q > 0 ? direct_sum(p.L, p.Q) : p.L;

  p.z = p.L.embed(sample_unit_sphere(m, rng));
  const DirectionSampler dirs(W, spec);
  const Vector pole = -p.z;
  p.u = dirs.sample_around(pole, m, rng);
  double log_q = -std::log(sphere_surface_area(m)) + dirs.log_around_density(p.u, pole);

  const double s = spec.center_scale;
  RadialDraw rd{};
  if (std::holds_alternative<AutoLaw>(spec.radial)) {
    double B = 0.0;
    for (const auto& ui : p.u) B += (p.z + ui).squaredNorm();
    B = std::max(B, 1e-12);
    const ChiLaw hi{static_cast<double>(m * n), s / std::sqrt(B)};
    if (r0 > 0.0) {
      // Near r = r0 the density behaves like r*^{m-1}, far out like
      // r*^{mn-1}; for u close to -z it decays like r^-2 in between.
      const ChiLaw lo{static_cast<double>(m), s / std::sqrt(2.0 * m)};
      const double pick = rng.uniform();
      double rs = 0.0;
      if (pick < 1.0 / 3.0) {
        rs = sample_radial(lo, rng);
      } else if (pick < 2.0 / 3.0) {
        rs = sample_radial(hi, rng);
      } else {
        rs = sample_lomax(s, rng);
      }
      rd.r = std::hypot(r0, rs);
      const double log_mix = log_sum_exp(log_sum_exp(radial_log_density(lo, rs), radial_log_density(hi, rs)),
                                         log_lomax_density(s, rs)) -
                             std::log(3.0);
      rd.log_density = log_mix + std::log(rd.r) - std::log(std::max(rs, kTiny));
    } else {
      rd = draw_shifted_radius(hi, 0.0, rng);
    }
  } else {
    rd = draw_shifted_radius(spec.radial, r0, rng);
  }
  p.r = rd.r;
  log_q += rd.log_density;
  const double w = grassmannian_measure(m, n - q) * std::exp(-log_q);
  return {std::move(p), w};
}

WeightedParam sample_anchored(const TheoremConfig& c, const ProposalSpec& spec, Rng& rng) {
  const int n = c.n;
  const int m = c.m;
  const int k = c.k;
  AnchoredParam p;
  p.F = c.anchor_flat();
  const Frame& B = p.F.direction;
  p.P = (k == m) ? B : embed_frame(B, sample_frame(k, m, rng));
  const Frame W = direct_sum(p.P, orthocomplement(B));
  const DirectionSampler dirs(W, spec, &p.P);
  p.u = dirs.sample_mutual(k + 1, rng);
  double log_q = dirs.log_mutual_density(p.u);

  const double s = spec.center_scale;
  Vector w_coords;
  if (std::holds_alternative<AutoLaw>(spec.radial)) {
    const Vector ubar_F = B.coordinates(mean_of(p.u));
    const double A = std::max((k + 1.0) * (1.0 - ubar_F.squaredNorm()), 1e-12 * (k + 1.0));
    const double dof = static_cast<double>(n * (k + 1) - m);
    const RadialDraw rd = draw_radius(spec, ChiLaw{dof, s / std::sqrt(A)}, rng);
    p.r = rd.r;
    const double ws = s / std::sqrt(k + 1.0);
    const Vector dw = rng.normal_vector(m) * ws;
    w_coords = dw - p.r * ubar_F;
    log_q += rd.log_density + log_normal_density(dw, ws);
  } else {
    const RadialDraw rd = draw_radius(spec, ChiLaw{}, rng);
    p.r = rd.r;
    w_coords = rng.normal_vector(m) * s;
    log_q += rd.log_density + log_normal_density(w_coords, s);
  }
  p.z = p.F.offset + B.embed(w_coords);
  const double w = grassmannian_measure(k, m) * std::exp(-log_q);
  return {std::move(p), w};
}

WeightedParam sample_on_sphere(const TheoremConfig& c, Rng& rng) {
  const int n = c.n;
  const int k = c.k;
  SphereOnSphereParam p;
  p.sigma = sample_frame(k, n + 1, rng);
  const Frame perp = orthocomplement(p.sigma);
  const int d = perp.subspace_dim();
  const double radius = std::pow(rng.uniform(), 1.0 / d);
  p.p = perp.embed(sample_unit_sphere(d, rng)) * radius;
  for (int i = 0; i <= k; ++i) p.u.push_back(p.sigma.embed(sample_unit_sphere(k, rng)));
  const double w = grassmannian_measure(k, n + 1) * ball_volume(d) * std::pow(sphere_surface_area(k), k + 1);
  return {std::move(p), w};
}

WeightedParam sample_on_sphere_symmetric(const TheoremConfig& c, Rng& rng) {
  const int n = c.n;
  const int k = c.k;
  const double a = 0.5 * k * n;
  const double b = 0.5 * (n - k + 1);
  const double ga = rng.gamma(a, 1.0);
  const double gb = rng.gamma(b, 1.0);
  SymmetricSphereParam p;
  p.n = n;
  p.t = ga / (ga + gb);
  for (int i = 0; i <= k; ++i) p.u.push_back(sample_unit_sphere(k, rng));
  const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  const double log_pt = (a - 1.0) * std::log(std::max(p.t, kTiny)) + (b - 1.0) * std::log(std::max(1.0 - p.t, kTiny)) - log_beta;
  const double prefactor = 0.5 * sphere_surface_area(n + 1) * grassmannian_measure(k, n);
  const double w = prefactor * std::pow(sphere_surface_area(k), k + 1) * std::exp(-log_pt);
  return {std::move(p), w};
}

}  // namespace

// --- constants -----------------------------------------------------------------

double sphere_surface_area(int n) {
  if (n < 1) throw InvalidInput("sphere_surface_area: n must be >= 1");
  // sigma_{n+2} = 2 pi sigma_n / n.
  double s = (n % 2 == 1) ? 2.0 : 2.0 * kPi;
  for (int d = (n % 2 == 1) ? 1 : 2; d + 2 <= n; d += 2) s *= 2.0 * kPi / d;
  return s;
}

double ball_volume(int d) {
  if (d < 0) throw InvalidInput("ball_volume: negative dimension");
  if (d == 0) return 1.0;
  return sphere_surface_area(d) / d;
}

double grassmannian_measure(int k, int n) {
  if (k < 0 || n < 0 || k > n) throw InvalidInput("grassmannian_measure: need 0 <= k <= n");
  const int j = std::min(k, n - k);
  double value = 1.0;
  for (int i = 0; i < j; ++i) value *= sphere_surface_area(n - i) / sphere_surface_area(i + 1);
  return value;
}

double factorial(int k) {
  static constexpr std::array<double, 21> kTable = [] {
    std::array<double, 21> t{};
    t[0] = 1.0;
    for (int i = 1; i < 21; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (k < 0) throw InvalidInput("factorial: negative argument");
  if (k < static_cast<int>(kTable.size())) return kTable[k];
  return std::exp(std::lgamma(k + 1.0));
}

// --- random streams --------------------------------------------------------------

Rng::Rng(RandomStream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(stream.seed), static_cast<std::uint32_t>(stream.seed >> 32),
                    static_cast<std::uint32_t>(stream.stream_id),
                    static_cast<std::uint32_t>(stream.stream_id >> 32)};
  engine_.seed(seq);
}

double Rng::uniform() { return uniform_(engine_); }

double Rng::normal() { return normal_(engine_); }

double Rng::gamma(double shape, double scale) {
  std::gamma_distribution<double> dist(shape, scale);
  return dist(engine_);
}

Vector Rng::normal_vector(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = normal();
  return v;
}

Vector sample_unit_sphere(int dim, Rng& rng) {
  if (dim < 1) throw InvalidInput("sample_unit_sphere: dim must be >= 1");
  if (dim == 1) return Vector::Constant(1, rng.uniform() < 0.5 ? -1.0 : 1.0);
  for (;;) {
    Vector v = rng.normal_vector(dim);
    const double norm = v.norm();
    if (norm > 1e-150) return v / norm;
  }
}

Frame sample_frame(int k, int n, Rng& rng) {
  if (k < 0 || k > n) throw InvalidInput("sample_frame: need 0 <= k <= n");
  if (k == 0) return Frame::empty(n);
  for (;;) {
    std::vector<Vector> vs;
    vs.reserve(k);
    for (int i = 0; i < k; ++i) vs.push_back(rng.normal_vector(n));
    try {
      return Frame::span_of(vs, n);
    } catch (const DegenerateInput&) {
      // Probability zero; redraw.
    }
  }
}

// --- proposals ----------------------------------------------------------------------

double sample_radial(const RadialLaw& law, Rng& rng) {
  struct Visitor {
    Rng& rng;
    double operator()(const AutoLaw&) const { throw InvalidInput("sample_radial: AutoLaw has no standalone draw"); }
    double operator()(const HalfNormalLaw& l) const { return std::abs(rng.normal()) * l.scale; }
    double operator()(const GammaLaw& l) const { return rng.gamma(l.shape, l.scale); }
    double operator()(const UniformLaw& l) const { return rng.uniform() * l.rmax; }
    double operator()(const ChiLaw& l) const { return l.scale * std::sqrt(2.0 * rng.gamma(0.5 * l.dof, 1.0)); }
  };
  return std::visit(Visitor{rng}, law);
}

double radial_log_density(const RadialLaw& law, double r) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  struct Visitor {
    double r;
    double operator()(const AutoLaw&) const { throw InvalidInput("radial_log_density: AutoLaw has no density"); }
    double operator()(const HalfNormalLaw& l) const {
      if (r < 0.0) return kNegInf;
      return 0.5 * std::log(2.0 / kPi) - std::log(l.scale) - 0.5 * r * r / (l.scale * l.scale);
    }
    double operator()(const GammaLaw& l) const {
      if (r < 0.0) return kNegInf;
      return (l.shape - 1.0) * std::log(std::max(r, kTiny)) - r / l.scale - std::lgamma(l.shape) -
             l.shape * std::log(l.scale);
    }
    double operator()(const UniformLaw& l) const { return (r < 0.0 || r > l.rmax) ? kNegInf : -std::log(l.rmax); }
    double operator()(const ChiLaw& l) const {
      if (r < 0.0) return kNegInf;
      const double half = 0.5 * l.dof;
      return (l.dof - 1.0) * std::log(std::max(r, kTiny)) - 0.5 * r * r / (l.scale * l.scale) -
             (half - 1.0) * std::log(2.0) - std::lgamma(half) - l.dof * std::log(l.scale);
    }
  };
  return std::visit(Visitor{r}, law);
}

void ProposalSpec::validate() const {
  struct Visitor {
    bool operator()(const AutoLaw&) const { return true; }
    bool operator()(const HalfNormalLaw& l) const { return l.scale > 0.0; }
    bool operator()(const GammaLaw& l) const { return l.shape > 0.0 && l.scale > 0.0; }
    bool operator()(const UniformLaw& l) const { return l.rmax > 0.0; }
    bool operator()(const ChiLaw& l) const { return l.dof > 0.0 && l.scale > 0.0; }
  };
  if (!std::visit(Visitor{}, radial)) throw InvalidInput("proposal: radial law parameters must be positive");
  if (!(center_scale > 0.0)) throw InvalidInput("proposal: center scale must be positive");
  if (!(cluster_fraction >= 0.0 && cluster_fraction < 1.0)) throw InvalidInput("proposal: cluster fraction in [0,1)");
  if (!(cluster_exponent > -1.0 && cluster_exponent <= 0.0)) throw InvalidInput("proposal: cluster exponent in (-1,0]");
}

WeightedParam sample_param(const TheoremConfig& config, const ProposalSpec& proposal, Rng& rng) {
  config.validate();
  proposal.validate();
  switch (config.theorem) {
    case TheoremId::kLinearBP:
      return sample_linear(config, proposal, rng);
    case TheoremId::kAffineBP:
      return sample_affine(config, proposal, rng);
    case TheoremId::kCircumscribed:
    case TheoremId::kTopDimensional:
      return sample_circumscribed(config, proposal, rng);
    case TheoremId::kPivoted1:
    case TheoremId::kPivoted2:
    case TheoremId::kPivotedCircle:
      return sample_pivoted(config, proposal, rng);
    case TheoremId::kAnchored:
      return sample_anchored(config, proposal, rng);
    case TheoremId::kOnSphere:
      return sample_on_sphere(config, rng);
    case TheoremId::kOnSphereSymmetric:
      return sample_on_sphere_symmetric(config, rng);
  }
  throw InvalidInput("sample_param: unknown theorem");
}

}  // namespace bpsphere
