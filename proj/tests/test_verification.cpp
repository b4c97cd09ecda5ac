#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bpsphere/densities.hpp"
#include "bpsphere/verification.hpp"

using namespace bpsphere;

namespace {

constexpr double kPi = std::numbers::pi;

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

EstimatorOptions opts(std::uint64_t seed, std::uint64_t base = 0) {
  EstimatorOptions o;
  o.seed = seed;
  o.stream_base = base;
  return o;
}

bool within(const EstimatorReport& r, double exact, double z = 3.5) {
  return std::abs(r.mean - exact) <= z * r.std_error;
}

}  // namespace

TEST_CASE("integrand values") {
  const PointTuple origin{Vector::Zero(2), Vector::Zero(2)};
  CHECK(Integrand::gaussian()(origin) == doctest::Approx(1.0 / (4 * kPi * kPi)));
  CHECK(Integrand::ball(1.0)(origin) == 1.0);
  CHECK(Integrand::ball(1.0)({vec({1.0, 0.0}), vec({0.0, 1.01})}) == 0.0);
  CHECK(Integrand::ball(1.0)({vec({1.0, 0.0}), vec({0.0, 1.0})}) == 1.0);
  const PointTuple tri{vec({0, 0}), vec({1, 0}), vec({0, 1})};
  CHECK(Integrand::volume_power(2.0, 2.0)(tri) == doctest::Approx(0.25));
  CHECK(Integrand::volume_power(2.0, 0.5)(tri) == 0.0);
  CHECK(Integrand::constant()(tri) == 1.0);
  CHECK(Integrand::ball(1.5).name() == "ball(radius=1.5)");
  CHECK(parse_integrand("volume-power") == IntegrandKind::kVolumePower);
  CHECK_THROWS_AS(parse_integrand("cubic"), InvalidInput);
}

TEST_CASE("closed-form integrals and domain checks") {
  const auto circ = TheoremConfig::make(TheoremId::kCircumscribed, 2, 1);
  CHECK(*Integrand::gaussian().exact_integral(circ) == 1.0);
  CHECK(*Integrand::ball(1.0).exact_integral(circ) == doctest::Approx(kPi * kPi));
  CHECK_FALSE(Integrand::volume_power(1.0, 2.0).exact_integral(circ).has_value());
  CHECK_THROWS_AS(Integrand::constant().validate_for(circ), InvalidInput);

  const auto sph = TheoremConfig::make(TheoremId::kOnSphere, 2, 1);
  CHECK(*Integrand::constant().exact_integral(sph) == doctest::Approx(16 * kPi * kPi).epsilon(1e-14));
  const auto sph3 = TheoremConfig::make(TheoremId::kOnSphereSymmetric, 3, 1);
  CHECK(*Integrand::constant().exact_integral(sph3) == doctest::Approx(4 * std::pow(kPi, 4)).epsilon(1e-14));
}

TEST_CASE("left-hand side estimates") {
  // Ball of radius 1 in R^1: interval length 2.
  const auto one = TheoremConfig::make(TheoremId::kLinearBP, 1, 1);
  const auto ball = Integrand::ball(1.0);
  const auto r = estimate_lhs(ball, one, 100000, ball.default_proposal(), opts(1));
  CHECK(one.tuple_size() == 1);
  CHECK(within(r, 2.0));

  const auto g = Integrand::gaussian();
  const auto cc = TheoremConfig::make(TheoremId::kCircumscribed, 3, 2);
  // Sampling from f itself: every weight is 1.
  const auto gl = estimate_lhs(g, cc, 100000, g.default_proposal(), opts(2));
  CHECK(gl.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gl.std_error < 1e-12);

  // Uniform sphere sampling with the exact total measure: no variance.
  const auto sph = TheoremConfig::make(TheoremId::kOnSphere, 2, 1);
  const auto s = estimate_lhs(Integrand::constant(), sph, 1000, ProposalSpec{}, opts(3));
  CHECK(s.mean == doctest::Approx(16 * kPi * kPi).epsilon(1e-12));
  CHECK(s.std_error < 1e-9);
}

TEST_CASE("right-hand side estimates") {
  const auto g = Integrand::gaussian();
  const auto c = TheoremConfig::make(TheoremId::kCircumscribed, 2, 1);
  const auto r = estimate_rhs(c, g, 200000, g.default_proposal(), opts(4));
  CHECK(within(r, 1.0));
  CHECK(r.std_error < 0.02);
  CHECK(r.samples == 200000);

  // Both beta exponents vanish and the S^0 sum of squared lengths is 8.
  const auto s2 = TheoremConfig::make(TheoremId::kOnSphereSymmetric, 2, 1);
  const auto a = estimate_rhs(s2, Integrand::constant(), 100000, ProposalSpec{}, opts(5));
  CHECK(within(a, 16 * kPi * kPi));
  const auto s3 = TheoremConfig::make(TheoremId::kOnSphereSymmetric, 3, 1);
  const auto b = estimate_rhs(s3, Integrand::constant(), 200000, ProposalSpec{}, opts(6));
  CHECK(within(b, 4 * std::pow(kPi, 4)));
  CHECK(b.std_error < 0.01 * 4 * std::pow(kPi, 4));

  TheoremConfig bad = TheoremConfig::make(TheoremId::kPivotedCircle, 3, 1, 2, 1, 1.0);
  bad.m = 3;
  CHECK_THROWS_AS(estimate_rhs(bad, g, 1000, ProposalSpec{}, opts(7)), InvalidInput);
}

TEST_CASE("non-Gaussian integrands agree across sides") {
  struct Case {
    TheoremConfig config;
    Integrand f;
  };
  const std::vector<Case> cases{
      {TheoremConfig::make(TheoremId::kCircumscribed, 3, 2), Integrand::ball(1.5)},
      {TheoremConfig::make(TheoremId::kTopDimensional, 2), Integrand::volume_power(1.0, 2.0)},
      {TheoremConfig::make(TheoremId::kPivotedCircle, 3, 1, 2, 1, 1.0), Integrand::ball(1.5)},
      {TheoremConfig::make(TheoremId::kAnchored, 3, 1, 2), Integrand::volume_power(2.0, 1.5)},
  };
  std::uint64_t base = 100;
  for (const auto& c : cases) {
    INFO(c.config.describe(), " ", c.f.name());
    const auto p = c.f.default_proposal();
    const auto lhs = estimate_lhs(c.f, c.config, 200000, p, opts(8, base++));
    const auto rhs = estimate_rhs(c.config, c.f, 200000, p, opts(8, base++));
    const auto v = compare(lhs, rhs);
    CHECK(v.pass);
    CHECK(rhs.std_error < 0.05 * lhs.mean);
  }
}

TEST_CASE("comparison arithmetic") {
  EstimatorReport a;
  a.mean = 1.0;
  a.std_error = 0.01;
  EstimatorReport b = a;
  auto v = compare(a, b);
  CHECK(v.z_score == 0.0);
  CHECK(v.pass);

  b.mean = 1.05;
  v = compare(a, b);
  CHECK(v.z_score == doctest::Approx(-0.05 / std::sqrt(2e-4)));
  CHECK(v.z_score == doctest::Approx(-3.536).epsilon(1e-3));
  CHECK_FALSE(v.pass);
  CHECK(compare(a, b, 4.0).pass);

  const auto exact = EstimatorReport::exact_value(16 * kPi * kPi, "sphere");
  EstimatorReport mc;
  mc.mean = 16 * kPi * kPi + 0.3;
  mc.std_error = 0.1;
  v = compare(exact, mc);
  CHECK(v.z_score == doctest::Approx(-3.0));
  CHECK(v.pass);
}

TEST_CASE("finite-difference oracle examples") {
  const auto top = TheoremConfig::make(TheoremId::kTopDimensional, 2);
  const CircumscribedParam p{Vector::Zero(2), Frame::identity(2), 2.0, {vec({1, 0}), vec({-1, 0}), vec({0, 1})}};
  CHECK(fd_jacobian_density(top, p) == doctest::Approx(16.0).epsilon(1e-5));

  const auto piv = TheoremConfig::make(TheoremId::kPivoted1, 2);
  PivotedCircleParam q;
  q.Q = Frame::empty(2);
  q.L = Frame::identity(2);
  q.r = 1.0;
  q.z = vec({1, 0});
  q.u = {vec({1, 0}), vec({0, 1})};
  CHECK(fd_jacobian_density(piv, q) == doctest::Approx(2.0).epsilon(1e-5));

  const auto sph = TheoremConfig::make(TheoremId::kOnSphere, 2, 2);
  Rng rng(RandomStream{9, 0});
  for (int i = 0; i < 20; ++i) {
    const auto param = draw_oracle_param(sph, rng);
    const double closed = density(sph, param);
    CHECK(std::abs(fd_jacobian_density(sph, param) - closed) <= 1e-5 * closed);
  }

  const auto circ = TheoremConfig::make(TheoremId::kCircumscribed, 3, 2);
  CHECK_FALSE(is_chart_free(circ));
  CHECK_THROWS_AS(fd_jacobian_density(circ, draw_oracle_param(circ, rng)), UnsupportedTheorem);
}

TEST_CASE("chart-free classification") {
  using T = TheoremId;
  CHECK(is_chart_free(TheoremConfig::make(T::kTopDimensional, 3)));
  CHECK(is_chart_free(TheoremConfig::make(T::kPivoted1, 2)));
  CHECK(is_chart_free(TheoremConfig::make(T::kCircumscribed, 3, 3)));
  CHECK(is_chart_free(TheoremConfig::make(T::kPivotedCircle, 3, 1, 2, 1, 1.0)));
  CHECK_FALSE(is_chart_free(TheoremConfig::make(T::kPivotedCircle, 4, 1, 2, 1, 1.0)));
  CHECK(is_chart_free(TheoremConfig::make(T::kAnchored, 3, 2, 2)));
  CHECK_FALSE(is_chart_free(TheoremConfig::make(T::kAnchored, 3, 1, 2)));
  CHECK(is_chart_free(TheoremConfig::make(T::kOnSphere, 2, 2)));
  CHECK_FALSE(is_chart_free(TheoremConfig::make(T::kOnSphere, 2, 1)));
  CHECK_FALSE(is_chart_free(TheoremConfig::make(T::kLinearBP, 3, 1)));
}

TEST_CASE("round trips on random tuples") {
  using T = TheoremId;
  Rng rng(RandomStream{13, 0});
  for (const auto& c : {TheoremConfig::make(T::kCircumscribed, 3, 2), TheoremConfig::make(T::kPivotedCircle, 3, 1, 2, 1, 1.0),
                        TheoremConfig::make(T::kAnchored, 4, 2, 3), TheoremConfig::make(T::kOnSphere, 3, 2)}) {
    for (int i = 0; i < 100; ++i) CHECK(roundtrip_error(c, draw_tuple(c, rng)) < 1e-9);
  }
  CHECK_THROWS_AS(decompose(TheoremConfig::make(T::kOnSphereSymmetric, 2, 1), draw_tuple(TheoremConfig::make(T::kOnSphere, 2, 1), rng)),
                  InvalidInput);
}

TEST_CASE("suite runner") {
  CHECK(run_suite({}, SuiteOptions{}).empty());

  TheoremConfig bad = TheoremConfig::make(TheoremId::kPivotedCircle, 3, 1, 2, 1, 1.0);
  bad.m = 3;
  const auto v = run_suite({{bad, Integrand::gaussian(), 1000}}, SuiteOptions{});
  REQUIRE(v.size() == 1);
  CHECK_FALSE(v[0].pass);
  CHECK_FALSE(v[0].reason.empty());

  const auto on_rn = run_suite({{TheoremConfig::make(TheoremId::kCircumscribed, 2, 1), Integrand::constant(), 1000}}, SuiteOptions{});
  CHECK_FALSE(on_rn[0].pass);
  CHECK_FALSE(on_rn[0].reason.empty());

  std::vector<CaseSpec> cases;
  for (const auto& c : default_suite(20000)) cases.push_back(c);
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions many;
  many.threads = 4;
  const auto a = run_suite(cases, one);
  const auto b = run_suite(cases, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lhs.mean == b[i].lhs.mean);
    CHECK(a[i].rhs.mean == b[i].rhs.mean);
    CHECK(a[i].rhs.std_error == b[i].rhs.std_error);
    CHECK(a[i].z_score == b[i].z_score);
  }
  SuiteOptions other = one;
  other.seed = 43;
  CHECK(run_suite(cases, other)[0].rhs.mean != a[0].rhs.mean);
}

TEST_CASE("standard errors shrink like one over root N") {
  using T = TheoremId;
  const std::vector<TheoremConfig> configs{
      TheoremConfig::make(T::kCircumscribed, 3, 2),  TheoremConfig::make(T::kTopDimensional, 3),
      TheoremConfig::make(T::kPivoted1, 3),          TheoremConfig::make(T::kPivoted2, 4, 1, 2),
      TheoremConfig::make(T::kPivotedCircle, 3, 1, 1, 1, 1.0), TheoremConfig::make(T::kAnchored, 3, 2, 2),
      TheoremConfig::make(T::kAffineBP, 3, 1),       TheoremConfig::make(T::kLinearBP, 3, 2)};
  const auto g = Integrand::gaussian();
  std::uint64_t base = 200;
  for (const auto& c : configs) {
    INFO(c.describe());
    const auto o = opts(42, base++);
    const auto r4 = estimate_rhs(c, g, 10000, g.default_proposal(), o);
    const auto r5 = estimate_rhs(c, g, 100000, g.default_proposal(), o);
    const auto r6 = estimate_rhs(c, g, 1000000, g.default_proposal(), o);
    const double d1 = r4.std_error / r5.std_error;
    const double d2 = r5.std_error / r6.std_error;
    INFO(d1, " ", d2);
    CHECK(d1 >= 2.8);
    CHECK(d1 <= 3.5);
    CHECK(d2 >= 2.8);
    CHECK(d2 <= 3.5);
    CHECK(within(r6, 1.0));
  }
}
