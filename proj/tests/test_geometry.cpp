#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bpsphere/geometry.hpp"
#include "oracles.hpp"

using namespace bpsphere;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

double max_diff(const PointTuple& a, const PointTuple& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return d;
}

PointTuple gaussian_tuple(int count, int n, std::mt19937_64& gen) {
  PointTuple x;
  for (int i = 0; i < count; ++i) x.push_back(oracle::gaussian(n, gen));
  return x;
}

}  // namespace

TEST_CASE("simplex volume of small simplices") {
  CHECK(simplex_volume({vec({0, 0}), vec({1, 0}), vec({0, 1})}) == doctest::Approx(0.5));
  CHECK(simplex_volume({vec({1, 0}), vec({0, 1})}, vec({0, 0})) == doctest::Approx(0.5));
  CHECK(simplex_volume({vec({0, 0}), vec({1, 1}), vec({2, 2})}) == doctest::Approx(0.0));
  CHECK(simplex_volume({vec({3, 4})}) == 1.0);
  CHECK_THROWS_AS(simplex_volume({vec({0, 0}), vec({1, 0, 0})}), InvalidInput);
}

TEST_CASE("simplex volume matches Cayley-Menger") {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const int k = 1 + trial % n;
    const PointTuple x = gaussian_tuple(k + 1, n, gen);
    CHECK(simplex_volume(x) == doctest::Approx(oracle::cayley_menger_volume(x)).epsilon(1e-10));
  }
  const PointTuple x = gaussian_tuple(4, 3, gen);
  CHECK(std::abs(simplex_volume(x) - oracle::cayley_menger_volume(x)) < 1e-10);
}

TEST_CASE("simplex volume: permutation, rotation and scaling") {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 2;
    const int k = 1 + trial % n;
    PointTuple x = gaussian_tuple(k + 1, n, gen);
    const double v = simplex_volume(x);
    PointTuple perm(x.rbegin(), x.rend());
    CHECK(simplex_volume(perm) == doctest::Approx(v).epsilon(1e-12));
    const Matrix R = oracle::random_rotation(n, gen);
    PointTuple rot;
    for (const auto& xi : x) rot.push_back(R * xi);
    CHECK(simplex_volume(rot) == doctest::Approx(v).epsilon(1e-10));
    const double lambda = 1.7;
    PointTuple scaled;
    for (const auto& xi : x) scaled.push_back(lambda * xi);
    CHECK(simplex_volume(scaled) == doctest::Approx(std::pow(lambda, k) * v).epsilon(1e-10));
  }
}

TEST_CASE("projection examples") {
  CHECK((project_onto(Frame::coordinate(3, 0, 1), vec({3, 4, 5})) - vec({3, 0, 0})).norm() < 1e-15);
  const Vector v = vec({0.3, -2, 7});
  CHECK((project_onto(Frame::identity(3), v) - v).norm() < 1e-15);
  const Frame diag = Frame::span_of({vec({1, 1})}, 2);
  CHECK((project_onto(diag, vec({1, 0})) - vec({0.5, 0.5})).norm() < 1e-15);
  CHECK_THROWS_AS(project_onto(diag, vec({1, 0, 0})), InvalidInput);
}

TEST_CASE("orthocomplement") {
  const Frame c = orthocomplement(Frame::coordinate(2, 0, 1));
  REQUIRE(c.subspace_dim() == 1);
  CHECK(std::abs(std::abs(c.vector(0)(1)) - 1.0) < 1e-15);
  CHECK(orthocomplement(Frame::identity(4)).subspace_dim() == 0);

  std::mt19937_64 gen(3);
  const Frame f = Frame::span_of({oracle::gaussian(5, gen), oracle::gaussian(5, gen)}, 5);
  const Frame g = orthocomplement(f);
  REQUIRE(g.subspace_dim() == 3);
  CHECK(g.orthonormality_residual() < 1e-12);
  CHECK((f.basis().transpose() * g.basis()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("frames validate orthonormality") {
  Matrix bad(2, 1);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(Frame::from_orthonormal(bad), InvalidInput);
  CHECK_THROWS_AS(Frame::span_of({vec({1, 0}), vec({2, 0})}, 2), DegenerateInput);
}

TEST_CASE("circumscribed decomposition examples") {
  const auto seg = decompose_circumscribed({vec({0, 0}), vec({2, 0})});
  CHECK((seg.z - vec({1, 0})).norm() < 1e-12);
  CHECK(seg.r == doctest::Approx(1.0));
  CHECK((seg.u[0] - vec({-1, 0})).norm() < 1e-12);
  CHECK((seg.u[1] - vec({1, 0})).norm() < 1e-12);
  CHECK(std::abs(std::abs(seg.L.vector(0)(0)) - 1.0) < 1e-12);

  const auto tri = decompose_circumscribed({vec({0, 0}), vec({1, 0}), vec({0, 1})});
  CHECK((tri.z - vec({0.5, 0.5})).norm() < 1e-12);
  CHECK(tri.r == doctest::Approx(std::sqrt(0.5)));

  CHECK_THROWS_AS(decompose_circumscribed({vec({0, 0}), vec({1, 1}), vec({2, 2})}), DegenerateInput);

  CircumscribedParam p{vec({0, 0, 0}), Frame::identity(3), 2.0, {vec({1, 0, 0}), vec({0, 1, 0})}};
  const PointTuple x = reconstruct_circumscribed(p);
  CHECK((x[0] - vec({2, 0, 0})).norm() < 1e-15);
}

TEST_CASE("circumscribed decomposition: equidistance and affine hull") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + trial % n;
    const PointTuple x = gaussian_tuple(k + 1, n, gen);
    const auto p = decompose_circumscribed(x);
    for (const auto& xi : x) CHECK(std::abs((xi - p.z).norm() - p.r) < 1e-10);
    std::vector<Vector> edges;
    for (int i = 1; i <= k; ++i) edges.push_back(x[i] - x[0]);
    const Frame hull = Frame::span_of(edges, n);
    const Vector off = p.z - x[0];
    CHECK((off - project_onto(hull, off)).norm() < 1e-10);
    CHECK(max_diff(reconstruct_circumscribed(p), x) < 1e-9);
  }
}

TEST_CASE("pivoted-circle decomposition") {
  const auto p = decompose_pivoted_circle({vec({2, 0}), vec({0, 2})}, Frame::empty(2), 0.0);
  CHECK(p.r == doctest::Approx(std::sqrt(2.0)));
  CHECK((p.z - vec({1, 1}) / std::sqrt(2.0)).norm() < 1e-12);

  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    const int q = trial % 2;
    const int m = 1 + trial % (n - q);
    const double r0 = q == 0 ? 0.0 : 0.5 + (trial % 3);
    const Frame Q = Frame::coordinate(n, n - q, q);
    const PointTuple x = gaussian_tuple(m, n, gen);
    const auto pc = decompose_pivoted_circle(x, Q, r0);
    const Vector c = pc.rstar() * pc.z;
    CHECK(project_onto(Q, c).norm() < 1e-12);
    CHECK(std::abs(pc.r * pc.r - r0 * r0 - c.squaredNorm()) < 1e-10 * std::max(1.0, pc.r * pc.r));
    for (const auto& xi : x) CHECK(std::abs((c - xi).squaredNorm() - c.squaredNorm() - r0 * r0) < 1e-9 * (1 + pc.r * pc.r));
    CHECK(max_diff(reconstruct_pivoted_circle(pc), x) < 1e-9);
  }
}

TEST_CASE("pivoted-circle reconstruction special cases") {
  PivotedCircleParam p;
  p.Q = Frame::coordinate(3, 2, 1);
  p.r0 = 1.5;
  p.L = Frame::coordinate(3, 0, 2);
  p.r = 1.5;
  p.z = vec({1, 0, 0});
  p.u = {vec({0, 1, 0})};
  CHECK((reconstruct_pivoted_circle(p)[0] - vec({0, 1.5, 0})).norm() < 1e-15);

  PivotedCircleParam q;
  q.Q = Frame::empty(2);
  q.L = Frame::identity(2);
  q.r = 2.0;
  q.z = vec({0, 1});
  q.u = {vec({1, 0}), vec({0, -1})};
  const PointTuple x = reconstruct_pivoted_circle(q);
  CHECK((x[0] - vec({2, 2})).norm() < 1e-15);
  CHECK((x[1] - vec({0, 0})).norm() < 1e-15);
}

TEST_CASE("anchored decomposition") {
  const AffineFlat axis{Frame::coordinate(2, 0, 1), vec({0, 0})};
  const auto p = decompose_anchored({vec({0, 1}), vec({0, -1})}, axis);
  CHECK(p.z.norm() < 1e-12);
  CHECK(p.r == doctest::Approx(1.0));

  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    const int m = 1 + trial % n;
    const int k = trial % (m + 1);
    if (k + n - m < 1 || k + 1 < 2) continue;
    const AffineFlat F = AffineFlat::through(oracle::gaussian(n, gen), Frame::coordinate(n, 0, m));
    const PointTuple x = gaussian_tuple(k + 1, n, gen);
    const auto a = decompose_anchored(x, F);
    CHECK((F.project(a.z) - a.z).norm() < 1e-10);
    for (const auto& xi : x) CHECK(std::abs((xi - a.z).norm() - a.r) < 1e-10 * std::max(1.0, a.r));
    const Frame W = direct_sum(a.P, orthocomplement(F.direction));
    for (const auto& ui : a.u) CHECK((ui - project_onto(W, ui)).norm() < 1e-10);
    CHECK(max_diff(reconstruct_anchored(a), x) < 1e-9);

    // Minimal radius: the other F-centred spheres through x have centres
    // z + v with v in F orthogonal to P, and radius^2 = r^2 + |v|^2.
    const Matrix inF = F.direction.basis().transpose() * a.P.basis();
    const Frame free_dirs = inF.cols() == 0 ? F.direction
                                            : Frame::from_orthonormal(F.direction.basis() *
                                                                      orthocomplement(Frame::from_orthonormal(inF)).basis());
    const double h = 1e-3;
    for (int j = 0; j < free_dirs.subspace_dim(); ++j) {
      const Vector z = a.z + h * free_dirs.vector(j);
      for (const auto& xi : x) CHECK(std::abs((xi - z).squaredNorm() - a.r * a.r - h * h) < 1e-9 * (1 + a.r * a.r));
    }
  }
}

TEST_CASE("anchored decomposition with F = R^n is the circumscribed one") {
  std::mt19937_64 gen(7);
  for (int n = 2; n <= 4; ++n) {
    const PointTuple x = gaussian_tuple(n + 1, n, gen);
    const auto a = decompose_anchored(x, AffineFlat{Frame::identity(n), Vector::Zero(n)});
    const auto c = decompose_circumscribed(x);
    CHECK((a.z - c.z).norm() < 1e-10);
    CHECK(std::abs(a.r - c.r) < 1e-10);
    for (int i = 0; i <= n; ++i) CHECK((a.u[i] - c.u[i]).norm() < 1e-10);
  }
}

TEST_CASE("on-sphere decomposition") {
  const auto p = decompose_on_sphere({vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK((p.p - vec({0.5, 0.5, 0})).norm() < 1e-12);
  CHECK(p.R() == doctest::Approx(std::sqrt(0.5)));
  CHECK((p.u[0] - vec({1, -1, 0}) / std::sqrt(2.0)).norm() < 1e-12);
  CHECK((p.u[1] - vec({-1, 1, 0}) / std::sqrt(2.0)).norm() < 1e-12);

  const auto g = decompose_on_sphere({vec({1, 0, 0}), vec({-1, 0, 0})});
  CHECK(g.R() == doctest::Approx(1.0));

  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + trial % n;
    PointTuple x;
    for (int i = 0; i <= k; ++i) x.push_back(oracle::unit(n + 1, gen));
    const auto s = decompose_on_sphere(x);
    const PointTuple y = reconstruct_on_sphere(s);
    CHECK(max_diff(y, x) < 1e-9);
    for (const auto& yi : y) CHECK(std::abs(yi.norm() - 1.0) < 1e-10);
    CHECK(project_onto(s.sigma, s.p).norm() < 1e-12);
  }

  SphereOnSphereParam pole;
  pole.sigma = Frame::coordinate(3, 0, 1);
  pole.p = vec({0, 0, 1});
  pole.u = {vec({1, 0, 0}), vec({-1, 0, 0})};
  for (const auto& xi : reconstruct_on_sphere(pole)) CHECK((xi - pole.p).norm() < 1e-15);

  CHECK_THROWS_AS(decompose_on_sphere({vec({2, 0, 0}), vec({0, 1, 0})}), InvalidInput);
}

TEST_CASE("decompose after reconstruct recovers the geometric quantities") {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    CircumscribedParam p;
    p.L = Frame::span_of({oracle::gaussian(n, gen), oracle::gaussian(n, gen)}, n);
    p.z = oracle::gaussian(n, gen);
    p.r = 0.5 + trial % 3;
    for (int i = 0; i < 3; ++i) {
      const Vector c = oracle::unit(2, gen);
      p.u.push_back(p.L.embed(c));
    }
    const auto back = decompose_circumscribed(reconstruct_circumscribed(p));
    CHECK((back.z - p.z).norm() < 1e-9);
    CHECK(std::abs(back.r - p.r) < 1e-9);
    CHECK((back.L.basis() * back.L.basis().transpose() - p.L.basis() * p.L.basis().transpose()).norm() < 1e-9);
  }
}

TEST_CASE("degeneracy threshold is scale invariant") {
  PointTuple x{vec({0, 0}), vec({1, 0}), vec({0.5, 1e-12})};
  CHECK(is_degenerate(x));
  for (auto& xi : x) xi *= 1e6;
  CHECK(is_degenerate(x));
  CHECK_FALSE(is_degenerate({vec({0, 0}), vec({1e-6, 0}), vec({0, 1e-6})}));
}
