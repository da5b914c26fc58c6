#include "lswg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "lswg/errors.hpp"

namespace lswg {

double QuadRule::measure() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

namespace {

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw InvalidArgument("Gauss rule needs at least one point");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half of the [-1, 1] weight
    nodes[i] = 0.5 * (1.0 - x);
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[i] = weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.5;
}

QuadRule edge_rule(const Point& a, const Point& b, int degree) {
  if (degree < 0) throw InvalidArgument("quadrature degree must be >= 0");
  const double len = (b - a).norm();
  if (!(len > 0.0)) throw InvalidArgument("zero-length edge");
  const int n = (degree + 2) / 2;  // ceil((degree + 1) / 2)
  std::vector<double> s, w;
  gauss_legendre(n, s, w);
  QuadRule rule;
  rule.exactness_degree = 2 * n - 1;
  for (int i = 0; i < n; ++i) {
    rule.points.push_back(a + s[i] * (b - a));
    rule.weights.push_back(w[i] * len);
    rule.params.push_back(s[i]);
  }
  return rule;
}

QuadRule triangle_rule(const Point& a, const Point& b, const Point& c, int degree) {
  if (degree < 0) throw InvalidArgument("quadrature degree must be >= 0");
  // Duffy collapse: p = a + u (b - a) + v (1 - u) (c - a), Jacobian 2|T| (1 - u).
  const int nu = (degree + 3) / 2;  // exact to degree + 1 in u
  const int nv = (degree + 2) / 2;
  std::vector<double> su, wu, sv, wv;
  gauss_legendre(nu, su, wu);
  gauss_legendre(nv, sv, wv);
  const double jac = std::abs(orient(a, b, c));
  QuadRule rule;
  rule.exactness_degree = std::min(2 * nu - 2, 2 * nv - 1);
  rule.points.reserve(nu * nv);
  rule.weights.reserve(nu * nv);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      const double u = su[i];
      const double v = sv[j] * (1.0 - u);
      rule.points.push_back(a + u * (b - a) + v * (c - a));
      rule.weights.push_back(wu[i] * wv[j] * (1.0 - u) * jac);
    }
  return rule;
}

namespace {

bool inside_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  return orient(a, b, p) >= 0.0 && orient(b, c, p) >= 0.0 && orient(c, a, p) >= 0.0;
}

}  // namespace

std::vector<std::array<int, 3>> ear_clip(std::span<const Point> polygon) {
  const int n = static_cast<int>(polygon.size());
  if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
  if (!is_simple_polygon(polygon)) throw GeometryError("polygon is self-intersecting");

  std::vector<int> ring(n);
  std::iota(ring.begin(), ring.end(), 0);
  if (signed_area(polygon) < 0.0) std::reverse(ring.begin(), ring.end());

  std::vector<std::array<int, 3>> tris;
  tris.reserve(n - 2);
  // Area-relative tolerance for treating a vertex as collinear.
  const double scale = std::max(polygon_diameter(polygon), 1e-300);
  const double flat = 1e-14 * scale * scale;

  while (ring.size() > 3) {
    const int m = static_cast<int>(ring.size());
    int clip = -1;
    for (int i = 0; i < m && clip < 0; ++i) {
      const Point& a = polygon[ring[(i + m - 1) % m]];
      const Point& b = polygon[ring[i]];
      const Point& c = polygon[ring[(i + 1) % m]];
      if (orient(a, b, c) <= flat) continue;
      bool empty = true;
      for (int j = 0; j < m && empty; ++j) {
        if (j == i || j == (i + m - 1) % m || j == (i + 1) % m) continue;
        const Point& p = polygon[ring[j]];
        if (p == a || p == b || p == c) continue;
        if (inside_triangle(a, b, c, p)) empty = false;
      }
      if (empty) clip = i;
    }
    if (clip < 0) {
      // No strictly convex ear left: drop a straight vertex (no area lost).
      for (int i = 0; i < m && clip < 0; ++i) {
        const Point& a = polygon[ring[(i + m - 1) % m]];
        const Point& b = polygon[ring[i]];
        const Point& c = polygon[ring[(i + 1) % m]];
        if (std::abs(orient(a, b, c)) <= flat) clip = i;
      }
      if (clip < 0) throw GeometryError("ear clipping failed; polygon is not simple");
      ring.erase(ring.begin() + clip);
      continue;
    }
    tris.push_back({ring[(clip + m - 1) % m], ring[clip], ring[(clip + 1) % m]});
    ring.erase(ring.begin() + clip);
  }
  tris.push_back({ring[0], ring[1], ring[2]});
  return tris;
}

QuadRule cell_rule(std::span<const Point> polygon, int degree) {
  QuadRule rule;
  rule.exactness_degree = degree;
  for (const auto& t : ear_clip(polygon)) {
    const QuadRule sub = triangle_rule(polygon[t[0]], polygon[t[1]], polygon[t[2]], degree);
    rule.exactness_degree = sub.exactness_degree;
    rule.points.insert(rule.points.end(), sub.points.begin(), sub.points.end());
    rule.weights.insert(rule.weights.end(), sub.weights.begin(), sub.weights.end());
  }
  return rule;
}

}  // namespace lswg
