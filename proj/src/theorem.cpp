#include "bpsphere/theorem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>

namespace bpsphere {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 10> kNames{{
    {TheoremId::kLinearBP, "linear-bp"},
    {TheoremId::kAffineBP, "affine-bp"},
    {TheoremId::kCircumscribed, "circumscribed"},
    {TheoremId::kTopDimensional, "top-dimensional"},
    {TheoremId::kPivoted1, "pivoted-1"},
    {TheoremId::kPivoted2, "pivoted-2"},
    {TheoremId::kPivotedCircle, "pivoted-circle"},
    {TheoremId::kAnchored, "anchored"},
    {TheoremId::kOnSphere, "on-sphere"},
    {TheoremId::kOnSphereSymmetric, "on-sphere-symmetric"},
}};

[[noreturn]] void fail(const TheoremConfig& c, const std::string& why) {
  throw InvalidInput(std::string(theorem_name(c.theorem)) + ": " + why);
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kNames)
    if (tid == id) return name;
  return "unknown";
}

TheoremId parse_theorem(std::string_view name) {
  for (const auto& [tid, tname] : kNames)
    if (tname == name) return tid;
  throw InvalidInput("unknown theorem: " + std::string(name));
}

void TheoremConfig::validate() const {
  if (n < 1) fail(*this, "n must be >= 1");
  switch (theorem) {
    case TheoremId::kLinearBP:
    case TheoremId::kAffineBP:
      if (k < 1 || k > n) fail(*this, "need 1 <= k <= n");
      break;
    case TheoremId::kCircumscribed:
      if (k < 1 || k > n) fail(*this, "need 1 <= k <= n");
      break;
    case TheoremId::kTopDimensional:
    case TheoremId::kPivoted1:
      break;
    case TheoremId::kPivoted2:
      if (m < 1 || m > n) fail(*this, "need 1 <= m <= n");
      break;
    case TheoremId::kPivotedCircle:
      if (q < 0 || q >= n) fail(*this, "need 0 <= q < n");
      if (m < 1 || m > n - q) fail(*this, "need 1 <= m <= n - q");
      if (!(r0 >= 0.0) || !std::isfinite(r0)) fail(*this, "need finite r0 >= 0");
      if (q == 0 && r0 != 0.0) fail(*this, "r0 must be 0 when q = 0");
      if (Q && (Q->ambient_dim() != n || Q->subspace_dim() != q)) fail(*this, "Q must be a q-frame in R^n");
      break;
    case TheoremId::kAnchored:
      if (m < 0 || m > n) fail(*this, "need 0 <= m <= n");
      if (k < 0 || k > m) fail(*this, "need 0 <= k <= m");
      if (k + n - m < 1) fail(*this, "need k + n - m >= 1 (non-empty sphere)");
      if (F && (F->ambient_dim() != n || F->dim() != m)) fail(*this, "F must be an m-flat in R^n");
      break;
    case TheoremId::kOnSphere:
    case TheoremId::kOnSphereSymmetric:
      if (k < 1 || k > n) fail(*this, "need 1 <= k <= n");
      break;
  }
}

int TheoremConfig::tuple_size() const {
  switch (theorem) {
    case TheoremId::kLinearBP:
      return k;
    case TheoremId::kTopDimensional:
      return n + 1;
    case TheoremId::kPivoted1:
      return n;
    case TheoremId::kPivoted2:
    case TheoremId::kPivotedCircle:
      return m;
    default:
      return k + 1;
  }
}

int TheoremConfig::point_dim() const { return on_sphere() ? n + 1 : n; }

bool TheoremConfig::on_sphere() const {
  return theorem == TheoremId::kOnSphere || theorem == TheoremId::kOnSphereSymmetric;
}

Frame TheoremConfig::fixed_Q() const {
  if (Q) return *Q;
  return Frame::coordinate(n, n - q, q);
}

AffineFlat TheoremConfig::anchor_flat() const {
  if (F) return *F;
  return AffineFlat{Frame::coordinate(n, 0, m), Vector::Zero(n)};
}

TheoremConfig TheoremConfig::make(TheoremId theorem, int n, int k, int m, int q, double r0) {
  TheoremConfig c;
  c.theorem = theorem;
  c.n = n;
  c.k = k;
  c.m = m;
  c.q = q;
  c.r0 = r0;
  switch (theorem) {
    case TheoremId::kTopDimensional:
      c.k = n;
      c.m = n;
      c.q = 0;
      c.r0 = 0.0;
      break;
    case TheoremId::kPivoted1:
      c.m = n;
      c.q = 0;
      c.r0 = 0.0;
      break;
    case TheoremId::kPivoted2:
      c.q = 0;
      c.r0 = 0.0;
      break;
    default:
      break;
  }
  return c;
}

std::string TheoremConfig::describe() const {
  std::ostringstream os;
  os << theorem_name(theorem) << " n=" << n;
  switch (theorem) {
    case TheoremId::kTopDimensional:
    case TheoremId::kPivoted1:
      break;
    case TheoremId::kPivoted2:
      os << " m=" << m;
      break;
    case TheoremId::kPivotedCircle:
      os << " m=" << m << " q=" << q << " r0=" << r0;
      break;
    case TheoremId::kAnchored:
      os << " m=" << m << " k=" << k;
      break;
    default:
      os << " k=" << k;
  }
  return os.str();
}

PointTuple reconstruct(const SphereParam& param) {
  struct Visitor {
    PointTuple operator()(const LinearParam& p) const { return reconstruct_linear(p); }
    PointTuple operator()(const AffineParam& p) const { return reconstruct_affine(p); }
    PointTuple operator()(const CircumscribedParam& p) const { return reconstruct_circumscribed(p); }
    PointTuple operator()(const PivotedCircleParam& p) const { return reconstruct_pivoted_circle(p); }
    PointTuple operator()(const AnchoredParam& p) const { return reconstruct_anchored(p); }
    PointTuple operator()(const SphereOnSphereParam& p) const { return reconstruct_on_sphere(p); }
    PointTuple operator()(const SymmetricSphereParam& p) const {
      const int k = p.u.empty() ? 0 : static_cast<int>(p.u.front().size());
      Vector base = Vector::Zero(p.n + 1);
      base(k) = std::sqrt(std::max(0.0, 1.0 - p.t));
      const double R = std::sqrt(std::max(0.0, p.t));
      PointTuple x;
      x.reserve(p.u.size());
      for (const auto& ui : p.u) {
        Vector xi = base;
        xi.head(k) += R * ui;
        x.push_back(std::move(xi));
      }
      return x;
    }
  };
  return std::visit(Visitor{}, param);
}

SphereParam decompose(const TheoremConfig& c, const PointTuple& x) {
  c.validate();
  if (static_cast<int>(x.size()) != c.tuple_size()) fail(c, "wrong number of points");
  check_tuple(x, c.point_dim());
  switch (c.theorem) {
    case TheoremId::kLinearBP: {
      LinearParam p{Frame::span_of(x, c.n), x};
      return p;
    }
    case TheoremId::kAffineBP: {
      std::vector<Vector> edges;
      for (std::size_t i = 1; i < x.size(); ++i) edges.push_back(x[i] - x[0]);
      AffineParam p;
      p.L = Frame::span_of(edges, c.n);
      p.h = x[0] - project_onto(p.L, x[0]);
      for (const auto& xi : x) p.u.push_back(xi - p.h);
      return p;
    }
    case TheoremId::kCircumscribed:
    case TheoremId::kTopDimensional:
      return decompose_circumscribed(x);
    case TheoremId::kPivoted1:
    case TheoremId::kPivoted2:
      return decompose_pivoted_circle(x, Frame::empty(c.n), 0.0);
    case TheoremId::kPivotedCircle:
      return decompose_pivoted_circle(x, c.fixed_Q(), c.r0);
    case TheoremId::kAnchored:
      return decompose_anchored(x, c.anchor_flat());
    case TheoremId::kOnSphere:
      return decompose_on_sphere(x);
    case TheoremId::kOnSphereSymmetric:
      break;
  }
  fail(c, "no pointwise decomposition");
}

}  // namespace bpsphere
