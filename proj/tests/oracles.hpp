#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the quadrature or basis code under test.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "lswg/geometry.hpp"
#include "lswg/mesh.hpp"

namespace lswg::testing {

using Rng = std::mt19937_64;

inline long double binomial(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Exact integral of x^a y^b over a simple CCW polygon by Green's theorem:
/// integral = 1/(a+1) * contour integral of x^(a+1) y^b dy, each edge
/// expanded binomially in its parameter t in [0, 1].
inline double monomial_integral(const std::vector<Point>& poly, int a, int b) {
  long double total = 0.0L;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const long double x0 = poly[i].x(), y0 = poly[i].y();
    const long double dx = poly[(i + 1) % m].x() - x0, dy = poly[(i + 1) % m].y() - y0;
    long double edge = 0.0L;
    for (int p = 0; p <= a + 1; ++p)
      for (int q = 0; q <= b; ++q)
        edge += binomial(a + 1, p) * binomial(b, q) * std::pow(x0, a + 1 - p) * std::pow(dx, p) *
                std::pow(y0, b - q) * std::pow(dy, q) / (p + q + 1);
    total += edge * dy;
  }
  return static_cast<double>(total / (a + 1));
}

/// Star-shaped polygon about `center` with m vertices at sorted random
/// angles and radii in [rmin, rmax]; counter-clockwise and simple.
inline std::vector<Point> random_star_polygon(Rng& rng, int m, const Point& center, double rmin, double rmax) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> angles(m);
  // Jittered angles keep consecutive vertices apart.
  for (int i = 0; i < m; ++i) angles[i] = 2.0 * std::numbers::pi * (i + 0.1 + 0.8 * unit(rng)) / m;
  std::vector<Point> poly;
  for (int i = 0; i < m; ++i) {
    const double r = rmin + (rmax - rmin) * unit(rng);
    poly.emplace_back(center.x() + r * std::cos(angles[i]), center.y() + r * std::sin(angles[i]));
  }
  return poly;
}

/// Graded-lex exponent list (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
inline std::vector<std::pair<int, int>> graded_lex(int degree) {
  std::vector<std::pair<int, int>> e;
  for (int d = 0; d <= degree; ++d)
    for (int j = 0; j <= d; ++j) e.emplace_back(d - j, j);
  return e;
}

/// Coefficients of c * x^a y^b in the basis ((x-xc)/h)^p ((y-yc)/h)^q,
/// written into `out` (graded-lex, length for `degree`).
inline void add_shifted_monomial(Eigen::VectorXd& out, int degree, double c, int a, int b, const Point& center,
                                 double h) {
  if (a < 0 || b < 0) return;
  const auto exps = graded_lex(degree);
  for (int p = 0; p <= a; ++p)
    for (int q = 0; q <= b; ++q) {
      if (p + q > degree) continue;
      int idx = 0;
      while (exps[idx] != std::make_pair(p, q)) ++idx;
      out[idx] += static_cast<double>(c * binomial(a, p) * binomial(b, q) * std::pow(center.x(), a - p) *
                                      std::pow(center.y(), b - q) * std::pow(h, p + q));
    }
}

inline PolytopalMesh single_cell_mesh(std::vector<Point> poly) {
  std::vector<int> loop(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) loop[i] = static_cast<int>(i);
  return PolytopalMesh(std::move(poly), {loop});
}

inline PolytopalMesh unit_triangle_mesh() { return single_cell_mesh({{0, 0}, {1, 0}, {0, 1}}); }

inline double relative_difference(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? 0.0 : (a - b).norm() / scale;
}

}  // namespace lswg::testing
