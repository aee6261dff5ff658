/**
 * @file  cheeger.hpp
 * @brief Cheeger constants of convex planar domains without any PDE solve.
 *
 * For a convex planar domain the Cheeger constant is h = 1/r where r solves
 * area(inner parallel body at distance r) = pi r^2; the Cheeger set is the
 * union of radius-r disks inside the domain, i.e. the inner body dilated by r.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "onelap/error.hpp"
#include "onelap/geometry.hpp"

namespace onelap {

struct CheegerResult {
  double h = 0.0;
  double r = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
};

/// {x in poly : dist(x, boundary) >= r}, by clipping with every edge offset inward by r.
inline std::vector<Point> inner_parallel_body(const ConvexPolygon& poly, double r) {
  if (!(r >= 0.0)) throw InvalidArgument("offset distance must be non-negative");
  std::vector<Point> cur = poly.vertices();
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  std::vector<Point> next;
  for (std::size_t e = 0; e < n && !cur.empty(); ++e) {
    const Point a = v[e];
    const Point dir = v[(e + 1) % n] - a;
    const double len = norm(dir);
    // signed distance to the inward-shifted edge line (positive inside)
    auto dist = [&](Point p) { return cross(dir, p - a) / len - r; };
    next.clear();
    const std::size_t m = cur.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point p = cur[i];
      const Point q = cur[(i + 1) % m];
      const double dp = dist(p);
      const double dq = dist(q);
      if (dp >= 0.0) next.push_back(p);
      if ((dp >= 0.0) != (dq >= 0.0)) {
        const double t = dp / (dp - dq);
        next.push_back(p + t * (q - p));
      }
    }
    cur.swap(next);
  }
  if (cur.size() < 3) cur.clear();
  return cur;
}

inline double inner_parallel_area(const ConvexPolygon& poly, double r) {
  const auto body = inner_parallel_body(poly, r);
  return body.empty() ? 0.0 : std::max(0.0, signed_area(body));
}

/// Half the minimal width: an upper bound on the inradius.
inline double half_min_width(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  double w = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < n; ++e) {
    const Point a = v[e];
    const Point dir = v[(e + 1) % n] - a;
    const double len = norm(dir);
    double far = 0.0;
    for (const Point& p : v) far = std::max(far, cross(dir, p - a) / len);
    w = std::min(w, far);
  }
  return 0.5 * w;
}

/// Radius of the largest inscribed disk (bisection on a non-empty inner body).
inline double inradius(const ConvexPolygon& poly) {
  double lo = 0.0, hi = half_min_width(poly);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inner_parallel_area(poly, mid) > 0.0 ? lo : hi) = mid;
  }
  return lo;
}

inline CheegerResult cheeger_constant(const ConvexPolygon& poly) {
  const double area = poly.area();
  auto F = [&](double r) { return inner_parallel_area(poly, r) - std::numbers::pi * r * r; };
  double lo = 0.0;
  double hi = half_min_width(poly);
  if (!(F(lo) > 0.0) || !(F(hi) < 0.0)) throw NumericalError("cheeger bisection: root not bracketed");
  for (int i = 0; i < 400 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (F(mid) > 0.0 ? lo : hi) = mid;
  }
  const double r = 0.5 * (lo + hi);
  if (std::abs(F(r)) > 1e-12 * area) throw NumericalError("cheeger bisection did not reach tolerance");
  const auto body = inner_parallel_body(poly, r);
  const double body_area = body.empty() ? 0.0 : signed_area(body);
  const double body_perimeter = body.empty() ? 0.0 : perimeter(body);
  CheegerResult out;
  out.r = r;
  out.h = 1.0 / r;
  out.area = body_area + body_perimeter * r + std::numbers::pi * r * r;
  out.perimeter = body_perimeter + 2.0 * std::numbers::pi * r;
  return out;
}

inline double cheeger_constant_disk(double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("disk radius must be positive");
  return 2.0 / radius;
}

}  // namespace onelap
