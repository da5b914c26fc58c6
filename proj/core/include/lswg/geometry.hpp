#pragma once

#include <span>

#include <Eigen/Core>

namespace lswg {

using Point = Eigen::Vector2d;

/// 2D cross product of (b - a) and (c - a).
inline double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

/// Shoelace area; positive for counter-clockwise loops.
double signed_area(std::span<const Point> polygon);

/// Area centroid of a simple polygon.
Point polygon_centroid(std::span<const Point> polygon);

/// Largest vertex-to-vertex distance.
double polygon_diameter(std::span<const Point> polygon);

/// True when two closed segments share a point other than a common endpoint
/// that both segments list explicitly.
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

/// Simple polygon check: no two non-adjacent sides touch, adjacent sides
/// overlap only at their shared vertex.
bool is_simple_polygon(std::span<const Point> polygon);

/// Point-in-polygon test that counts points within `tol` of the boundary as inside.
bool contains_point(std::span<const Point> polygon, const Point& p, double tol = 1e-12);

/// Euclidean distance from p to the closed polygon (0 when inside).
double distance_to_polygon(std::span<const Point> polygon, const Point& p);

}  // namespace lswg
