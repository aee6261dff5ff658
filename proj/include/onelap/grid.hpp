/**
 * @file  grid.hpp
 * @brief Rasterized planar domains and the discrete BV calculus on them.
 *
 * Fields are cell-centred and zero-extended outside the domain mask. The
 * gradient uses forward differences and reads zero across the mask boundary,
 * so the total variation automatically carries the boundary trace term. The
 * divergence is the exact negative adjoint of the gradient with respect to
 * the h^2-weighted cell sum.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "onelap/error.hpp"
#include "onelap/geometry.hpp"

namespace onelap {

/**
 * Uniform grid of nx * ny square cells of side h with an interior mask.
 *
 * Cell (i, j) has centre origin + ((i + 1/2) h, (j + 1/2) h) and linear index
 * j * nx + i. The mask never touches the outermost ring of cells, so every
 * forward-difference stencil that touches the domain fits in the grid.
 */
class GridDomain {
 public:
  GridDomain(int nx, int ny, double h, Point origin, std::vector<std::uint8_t> mask)
      : nx_(nx), ny_(ny), h_(h), origin_(origin), mask_(std::move(mask)) {
    if (nx < 3 || ny < 3) throw InvalidArgument("grid must be at least 3x3 cells");
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing h must be positive");
    if (mask_.size() != cell_count()) throw InvalidArgument("mask size does not match nx*ny");
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        if (mask_[index(i, j)] && (i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1)) {
          throw InvalidArgument("mask must not touch the grid border (pad with one exterior cell)");
        }
      }
    }
    build_cell_lists();
    if (mask_cells_.empty()) throw InvalidArgument("empty rasterization: no cell centre lies inside the shape");
    check_connected();
  }

  /// Surround a core mask with one ring of exterior cells; origin is the core's lower-left corner.
  static std::shared_ptr<const GridDomain> padded(int nx, int ny, double h, Point origin,
                                                  std::span<const std::uint8_t> core) {
    if (nx < 1 || ny < 1 || core.size() != static_cast<std::size_t>(nx) * ny) {
      throw InvalidArgument("core mask size does not match nx*ny");
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx + 2) * (ny + 2), 0);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        mask[static_cast<std::size_t>(j + 1) * (nx + 2) + (i + 1)] = core[static_cast<std::size_t>(j) * nx + i] ? 1 : 0;
    return std::make_shared<const GridDomain>(nx + 2, ny + 2, h, Point{origin.x - h, origin.y - h},
                                              std::move(mask));
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double h() const { return h_; }
  Point origin() const { return origin_; }
  std::size_t cell_count() const { return static_cast<std::size_t>(nx_) * ny_; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }
  Point center(int i, int j) const { return {origin_.x + (i + 0.5) * h_, origin_.y + (j + 0.5) * h_}; }

  bool inside(int i, int j) const {
    return i >= 0 && j >= 0 && i < nx_ && j < ny_ && mask_[index(i, j)] != 0;
  }
  bool inside(std::size_t k) const { return mask_[k] != 0; }

  const std::vector<std::uint8_t>& mask() const { return mask_; }
  /// Linear indices of mask cells, ascending.
  const std::vector<std::size_t>& mask_cells() const { return mask_cells_; }
  /// Mask cells with at least one non-mask 4-neighbour.
  const std::vector<std::size_t>& boundary_cells() const { return boundary_cells_; }
  /// Cells whose forward-difference stencil touches the mask (where a gradient can be non-zero).
  const std::vector<std::size_t>& stencil_cells() const { return stencil_cells_; }

  double cell_area() const { return h_ * h_; }
  double area() const { return cell_area() * static_cast<double>(mask_cells_.size()); }

  friend bool operator==(const GridDomain& a, const GridDomain& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.h_ == b.h_ && a.origin_ == b.origin_ && a.mask_ == b.mask_;
  }

 private:
  void build_cell_lists() {
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        const std::size_t k = index(i, j);
        if (mask_[k]) {
          mask_cells_.push_back(k);
          if (!inside(i + 1, j) || !inside(i - 1, j) || !inside(i, j + 1) || !inside(i, j - 1)) {
            boundary_cells_.push_back(k);
          }
        }
        if (mask_[k] || inside(i + 1, j) || inside(i, j + 1)) stencil_cells_.push_back(k);
      }
    }
  }

  void check_connected() const {
    std::vector<std::uint8_t> seen(cell_count(), 0);
    std::deque<std::size_t> queue{mask_cells_.front()};
    seen[mask_cells_.front()] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
      const std::size_t k = queue.front();
      queue.pop_front();
      ++reached;
      const int i = static_cast<int>(k % nx_);
      const int j = static_cast<int>(k / nx_);
      const int di[] = {1, -1, 0, 0};
      const int dj[] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        if (inside(i + di[d], j + dj[d])) {
          const std::size_t m = index(i + di[d], j + dj[d]);
          if (!seen[m]) {
            seen[m] = 1;
            queue.push_back(m);
          }
        }
      }
    }
    if (reached != mask_cells_.size()) throw InvalidArgument("rasterized mask is not 4-connected");
  }

  int nx_;
  int ny_;
  double h_;
  Point origin_;
  std::vector<std::uint8_t> mask_;
  std::vector<std::size_t> mask_cells_;
  std::vector<std::size_t> boundary_cells_;
  std::vector<std::size_t> stencil_cells_;
};

using DomainPtr = std::shared_ptr<const GridDomain>;

/**
 * Real value per grid cell, zero outside the mask.
 *
 * Mutable access through values() must keep exterior cells at zero;
 * check() re-validates the invariant.
 */
class ScalarField {
 public:
  explicit ScalarField(DomainPtr domain)
      : domain_(std::move(domain)), values_(domain_->cell_count(), 0.0) {}

  ScalarField(DomainPtr domain, std::vector<double> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_->cell_count()) throw InvalidArgument("field size does not match domain");
    check();
  }

  /// Value c on every mask cell.
  static ScalarField constant(DomainPtr domain, double c) {
    ScalarField f(std::move(domain));
    for (std::size_t k : f.domain().mask_cells()) f.values_[k] = c;
    return f;
  }

  const GridDomain& domain() const { return *domain_; }
  const DomainPtr& domain_ptr() const { return domain_; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  double at(int i, int j) const { return values_[domain_->index(i, j)]; }
  void set(int i, int j, double v) {
    if (!domain_->inside(i, j)) throw InvalidArgument("cannot set a field value outside the mask");
    values_[domain_->index(i, j)] = v;
  }

  void check() const {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!std::isfinite(values_[k])) throw InvalidArgument("scalar field has a non-finite value");
      if (!domain_->inside(k) && values_[k] != 0.0) {
        throw InvalidArgument("scalar field is non-zero outside the mask");
      }
    }
  }

  double max() const {
    double m = 0.0;
    for (std::size_t k : domain_->mask_cells()) m = std::max(m, values_[k]);
    return m;
  }
  double min() const {
    double m = values_[domain_->mask_cells().front()];
    for (std::size_t k : domain_->mask_cells()) m = std::min(m, values_[k]);
    return m;
  }

  ScalarField& operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
  }
  friend ScalarField operator*(double s, ScalarField f) { return f *= s; }

 private:
  DomainPtr domain_;
  std::vector<double> values_;
};

/// Two components per grid cell: the forward-difference pair anchored at that cell.
class VectorField {
 public:
  explicit VectorField(DomainPtr domain)
      : domain_(std::move(domain)), vx_(domain_->cell_count(), 0.0), vy_(domain_->cell_count(), 0.0) {}

  VectorField(DomainPtr domain, std::vector<double> vx, std::vector<double> vy)
      : domain_(std::move(domain)), vx_(std::move(vx)), vy_(std::move(vy)) {
    if (vx_.size() != domain_->cell_count() || vy_.size() != domain_->cell_count()) {
      throw InvalidArgument("vector field size does not match domain");
    }
    for (std::size_t k = 0; k < vx_.size(); ++k) {
      if (!std::isfinite(vx_[k]) || !std::isfinite(vy_[k])) {
        throw InvalidArgument("vector field has a non-finite component");
      }
    }
  }

  const GridDomain& domain() const { return *domain_; }
  const DomainPtr& domain_ptr() const { return domain_; }
  std::span<double> vx() { return vx_; }
  std::span<double> vy() { return vy_; }
  std::span<const double> vx() const { return vx_; }
  std::span<const double> vy() const { return vy_; }
  double magnitude(std::size_t k) const { return std::hypot(vx_[k], vy_[k]); }

 private:
  DomainPtr domain_;
  std::vector<double> vx_;
  std::vector<double> vy_;
};

// ---------------------------------------------------------------------------
// Discrete calculus
// ---------------------------------------------------------------------------

inline VectorField gradient(const ScalarField& u) {
  const GridDomain& d = u.domain();
  VectorField g(u.domain_ptr());
  const auto v = u.values();
  const std::size_t nx = static_cast<std::size_t>(d.nx());
  const double inv_h = 1.0 / d.h();
  auto gx = g.vx();
  auto gy = g.vy();
  for (std::size_t k : d.stencil_cells()) {
    gx[k] = (v[k + 1] - v[k]) * inv_h;
    gy[k] = (v[k + nx] - v[k]) * inv_h;
  }
  return g;
}

/// Negative adjoint of gradient(); zero outside the mask.
inline ScalarField divergence(const VectorField& s) {
  const GridDomain& d = s.domain();
  ScalarField out(s.domain_ptr());
  const std::size_t nx = static_cast<std::size_t>(d.nx());
  const double inv_h = 1.0 / d.h();
  const auto sx = s.vx();
  const auto sy = s.vy();
  auto o = out.values();
  for (std::size_t k : d.mask_cells()) {
    o[k] = ((sx[k] - sx[k - 1]) + (sy[k] - sy[k - nx])) * inv_h;
  }
  return out;
}

inline double integrate(const ScalarField& u) {
  double sum = 0.0;
  for (std::size_t k : u.domain().mask_cells()) sum += u[k];
  return u.domain().cell_area() * sum;
}

/// h^2 * sum |grad u| with the Euclidean norm of each forward-difference pair.
inline double total_variation(const ScalarField& u) {
  const GridDomain& d = u.domain();
  const auto v = u.values();
  const std::size_t nx = static_cast<std::size_t>(d.nx());
  double sum = 0.0;
  for (std::size_t k : d.stencil_cells()) {
    sum += std::hypot(v[k + 1] - v[k], v[k + nx] - v[k]);
  }
  // |(a/h, b/h)| h^2 = |(a, b)| h
  return d.h() * sum;
}

inline double inner(const ScalarField& a, const ScalarField& b) {
  double sum = 0.0;
  for (std::size_t k : a.domain().mask_cells()) sum += a[k] * b[k];
  return a.domain().cell_area() * sum;
}

inline double inner(const VectorField& a, const VectorField& b) {
  const auto ax = a.vx(), ay = a.vy(), bx = b.vx(), by = b.vy();
  double sum = 0.0;
  for (std::size_t k = 0; k < ax.size(); ++k) sum += ax[k] * bx[k] + ay[k] * by[k];
  return a.domain().cell_area() * sum;
}

inline double norm(const ScalarField& a) { return std::sqrt(inner(a, a)); }
inline double norm(const VectorField& a) { return std::sqrt(inner(a, a)); }

/// h^2-weighted L1 norm.
inline double l1_norm(const ScalarField& a) {
  double sum = 0.0;
  for (std::size_t k : a.domain().mask_cells()) sum += std::abs(a[k]);
  return a.domain().cell_area() * sum;
}

inline double l1_distance(const ScalarField& a, const ScalarField& b) {
  double sum = 0.0;
  for (std::size_t k : a.domain().mask_cells()) sum += std::abs(a[k] - b[k]);
  return a.domain().cell_area() * sum;
}

// ---------------------------------------------------------------------------
// Rasterization
// ---------------------------------------------------------------------------

struct Disk {
  double radius = 1.0;
  Point center{};
};

/// Axis-aligned rectangle [0, width] x [0, height].
struct Rectangle {
  double width = 1.0;
  double height = 1.0;
};

using Shape = std::variant<Disk, Rectangle, ConvexPolygon>;

inline std::string shape_name(const Shape& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Disk>) return "disk";
        else if constexpr (std::is_same_v<T, Rectangle>) return "rectangle";
        else return "polygon";
      },
      s);
}

/**
 * Mark the cells whose centres lie strictly inside the shape.
 *
 * `resolution` is cells per unit length; the shape's smallest extent must
 * span at least 8 cells. The grid is centred on the shape's bounding box and
 * padded with one exterior ring.
 */
inline DomainPtr rasterize(const Shape& shape, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw InvalidArgument("resolution must be positive");
  }
  Point lo, hi;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Disk>) {
          if (!(v.radius > 0.0)) throw InvalidArgument("disk radius must be positive");
          lo = {v.center.x - v.radius, v.center.y - v.radius};
          hi = {v.center.x + v.radius, v.center.y + v.radius};
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          if (!(v.width > 0.0) || !(v.height > 0.0)) throw InvalidArgument("rectangle sides must be positive");
          lo = {0.0, 0.0};
          hi = {v.width, v.height};
        } else {
          v.bounding_box(lo, hi);
        }
      },
      shape);

  const double smallest = std::min(hi.x - lo.x, hi.y - lo.y);
  if (smallest * resolution < 8.0 - 1e-9) {
    throw InvalidArgument("resolution too coarse: need at least 8 cells across the smallest feature");
  }
  const double h = 1.0 / resolution;
  const int nx = static_cast<int>(std::ceil((hi.x - lo.x) * resolution - 1e-9));
  const int ny = static_cast<int>(std::ceil((hi.y - lo.y) * resolution - 1e-9));
  const Point origin{0.5 * (lo.x + hi.x) - 0.5 * nx * h, 0.5 * (lo.y + hi.y) - 0.5 * ny * h};

  std::vector<std::uint8_t> core(static_cast<std::size_t>(nx) * ny, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point c{origin.x + (i + 0.5) * h, origin.y + (j + 0.5) * h};
      const bool in = std::visit(
          [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Disk>) {
              const Point d = c - v.center;
              return dot(d, d) < v.radius * v.radius;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
              return c.x > 0.0 && c.x < v.width && c.y > 0.0 && c.y < v.height;
            } else {
              return v.contains(c);
            }
          },
          shape);
      core[static_cast<std::size_t>(j) * nx + i] = in ? 1 : 0;
    }
  }
  return GridDomain::padded(nx, ny, h, origin, core);
}

/// Same mask and field shifted by whole cells inside a larger grid (used to test translation invariance).
inline DomainPtr shifted(const GridDomain& d, int di, int dj) {
  if (di < 0 || dj < 0) throw InvalidArgument("shift must be non-negative");
  const int nx = d.nx() + di;
  const int ny = d.ny() + dj;
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
  for (std::size_t k : d.mask_cells()) {
    const int i = static_cast<int>(k % d.nx()) + di;
    const int j = static_cast<int>(k / d.nx()) + dj;
    mask[static_cast<std::size_t>(j) * nx + i] = 1;
  }
  return std::make_shared<const GridDomain>(nx, ny, d.h(),
                                            Point{d.origin().x - di * d.h(), d.origin().y - dj * d.h()},
                                            std::move(mask));
}

inline ScalarField transfer(const ScalarField& u, const DomainPtr& target, int di, int dj) {
  ScalarField out(target);
  const GridDomain& d = u.domain();
  for (std::size_t k : d.mask_cells()) {
    const int i = static_cast<int>(k % d.nx()) + di;
    const int j = static_cast<int>(k / d.nx()) + dj;
    out.set(i, j, u[k]);
  }
  return out;
}

}  // namespace onelap
