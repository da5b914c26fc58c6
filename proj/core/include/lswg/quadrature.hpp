#pragma once

#include <array>
#include <span>
#include <vector>

#include "lswg/geometry.hpp"

namespace lswg {

/// Points and positive weights with a guaranteed polynomial exactness.
/// Edge rules also carry the arclength parameter s in [0, 1] of each point.
struct QuadRule {
  std::vector<Point> points;
  std::vector<double> weights;
  std::vector<double> params;
  int exactness_degree = 0;

  std::size_t size() const { return weights.size(); }
  double measure() const;
};

/// n-point Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss rule on the segment a -> b exact for degree `degree` in the arclength
/// parameter; params run from 0 at a to 1 at b.
QuadRule edge_rule(const Point& a, const Point& b, int degree);

/// Collapsed tensor Gauss rule on a triangle of either orientation.
QuadRule triangle_rule(const Point& a, const Point& b, const Point& c, int degree);

/// Ear-clipping triangulation of a simple polygon. Returned index triples are
/// counter-clockwise. Throws GeometryError on a self-intersecting polygon.
std::vector<std::array<int, 3>> ear_clip(std::span<const Point> polygon);

/// Composite rule: ear-clipped sub-triangles, each carrying triangle_rule(degree).
QuadRule cell_rule(std::span<const Point> polygon, int degree);

template <class F>
double integrate(F&& f, const QuadRule& rule) {
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) sum += rule.weights[q] * f(rule.points[q]);
  return sum;
}

}  // namespace lswg
