/**
 * @file  geometry.hpp
 * @brief Planar points and validated convex polygons.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "onelap/error.hpp"

namespace onelap {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

/// Signed shoelace area; positive for counter-clockwise vertex order.
inline double signed_area(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(pts[i], pts[(i + 1) % n]);
  }
  return 0.5 * twice;
}

inline double perimeter(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  double p = 0.0;
  for (std::size_t i = 0; i < n && n > 1; ++i) p += norm(pts[(i + 1) % n] - pts[i]);
  return p;
}

/**
 * Strictly convex, counter-clockwise, simple polygon.
 *
 * Construction validates: at least three vertices, a strictly positive turn
 * at every vertex (collinear triples are rejected), and a total turning of
 * exactly one revolution (rules out star-shaped self-intersections whose
 * turns are all positive).
 */
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    validate();
  }

  static ConvexPolygon rectangle(double width, double height) {
    if (!(width > 0.0) || !(height > 0.0)) {
      throw InvalidArgument("rectangle sides must be positive");
    }
    return ConvexPolygon({{0.0, 0.0}, {width, 0.0}, {width, height}, {0.0, height}});
  }

  /// Regular polygon inscribed in the circle of the given radius about the origin.
  static ConvexPolygon regular(int sides, double radius) {
    if (sides < 3 || !(radius > 0.0)) throw InvalidArgument("regular polygon needs >= 3 sides and radius > 0");
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(sides));
    for (int k = 0; k < sides; ++k) {
      const double a = 2.0 * std::numbers::pi * k / sides;
      v.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return ConvexPolygon(std::move(v));
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  double area() const { return signed_area(vertices_); }
  double perimeter() const { return onelap::perimeter(vertices_); }

  ConvexPolygon scaled(double s) const {
    if (!(s > 0.0)) throw InvalidArgument("scale factor must be positive");
    std::vector<Point> v = vertices_;
    for (auto& p : v) p = s * p;
    return ConvexPolygon(std::move(v));
  }

  /// True iff p lies strictly inside (on the left of every edge).
  bool contains(Point p) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = vertices_[i];
      const Point b = vertices_[(i + 1) % n];
      if (cross(b - a, p - a) <= 0.0) return false;
    }
    return true;
  }

  void bounding_box(Point& lo, Point& hi) const {
    lo = hi = vertices_.front();
    for (const auto& p : vertices_) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  }

 private:
  void validate() const {
    const std::size_t n = vertices_.size();
    if (n < 3) throw InvalidArgument("polygon needs at least 3 vertices");
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = vertices_[i];
      const Point b = vertices_[(i + 1) % n];
      const Point c = vertices_[(i + 2) % n];
      if (!std::isfinite(a.x) || !std::isfinite(a.y)) throw InvalidArgument("polygon vertex is not finite");
      const Point e1 = b - a;
      const Point e2 = c - b;
      const double l1 = norm(e1);
      const double l2 = norm(e2);
      if (l1 == 0.0 || l2 == 0.0) throw InvalidArgument("polygon has repeated vertices");
      const double turn = cross(e1, e2) / (l1 * l2);
      if (turn <= 1e-12) {
        throw InvalidArgument(turn < -1e-12 ? "polygon is not convex and counter-clockwise"
                                            : "polygon has collinear vertices");
      }
      turning += std::atan2(cross(e1, e2), dot(e1, e2));
    }
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
      throw InvalidArgument("polygon is self-intersecting");
    }
  }

  std::vector<Point> vertices_;
};

}  // namespace onelap
