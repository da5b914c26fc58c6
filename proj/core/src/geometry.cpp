#include "lswg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lswg {

double signed_area(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    twice += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * twice;
}

Point polygon_centroid(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  // Shift to the first vertex to limit cancellation on small cells.
  const Point origin = polygon[0];
  double twice_area = 0.0;
  Point acc = Point::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = polygon[i] - origin;
    const Point b = polygon[(i + 1) % n] - origin;
    const double cross = a.x() * b.y() - b.x() * a.y();
    twice_area += cross;
    acc += cross * (a + b);
  }
  return origin + acc / (3.0 * twice_area);
}

double polygon_diameter(std::span<const Point> polygon) {
  double d = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i)
    for (std::size_t j = i + 1; j < polygon.size(); ++j)
      d = std::max(d, (polygon[i] - polygon[j]).norm());
  return d;
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int d1 = sign(orient(q1, q2, p1));
  const int d2 = sign(orient(q1, q2, p2));
  const int d3 = sign(orient(p1, p2, q1));
  const int d4 = sign(orient(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

bool is_simple_polygon(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    if (a == b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = polygon[j];
      const Point& d = polygon[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex is expected; reject a fold-back where the sides overlap.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& u = (j == i + 1) ? a : b;
        const Point& w = (j == i + 1) ? d : c;
        if (orient(shared, u, w) == 0.0 && (u - shared).dot(w - shared) > 0.0) return false;
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

namespace {

double segment_distance(const Point& a, const Point& b, const Point& p) {
  const Point ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * ab - p).norm();
}

}  // namespace

bool contains_point(std::span<const Point> polygon, const Point& p, double tol) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = polygon[i];
    const Point& b = polygon[j];
    if (segment_distance(a, b, p) <= tol) return true;
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x = a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

double distance_to_polygon(std::span<const Point> polygon, const Point& p) {
  if (contains_point(polygon, p, 0.0)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) d = std::min(d, segment_distance(polygon[i], polygon[(i + 1) % n], p));
  return d;
}

}  // namespace lswg
