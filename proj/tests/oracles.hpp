#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

// Independent reference implementations used only by the tests.
namespace oracle {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Volume of the simplex on `pts` from pairwise distances only.
inline double cayley_menger_volume(const std::vector<Vector>& pts) {
  const int k = static_cast<int>(pts.size()) - 1;
  if (k == 0) return 1.0;
  Matrix cm = Matrix::Ones(k + 2, k + 2);
  cm(0, 0) = 0.0;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) cm(i + 1, j + 1) = (pts[i] - pts[j]).squaredNorm();
  const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
  const double v2 = sign * cm.determinant() / (std::pow(2.0, k) * factorial(k) * factorial(k));
  return std::sqrt(std::max(v2, 0.0));
}

// Haar-random rotation of R^n (determinant +1).
inline Matrix random_rotation(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(gen);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

inline Vector gaussian(int n, std::mt19937_64& gen, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = g(gen);
  return v;
}

inline Vector unit(int n, std::mt19937_64& gen) {
  Vector v = gaussian(n, gen);
  return v / v.norm();
}

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

// Critical value of the two-sample KS statistic at level alpha.
inline double ks_critical(std::size_t n, std::size_t m, double alpha) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
}

}  // namespace oracle
