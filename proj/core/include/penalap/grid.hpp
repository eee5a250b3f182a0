#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

namespace penalap {

// Periodic 1D grid: node i at origin + i*h, i in [0, n).
struct Grid1D {
  int n = 0;
  double origin = 0.0;
  double extent = 0.0;

  double h() const { return extent / n; }
  double x(int i) const { return origin + i * h(); }
  double x_half(int i) const { return origin + (i + 0.5) * h(); }
  int wrap(int i) const {
    int m = i % n;
    return m < 0 ? m + n : m;
  }
  bool operator==(const Grid1D&) const = default;
};

// Periodic 2D grid: node (i,j) at origin + (i*hx, j*hy).
struct Grid2D {
  int nx = 0, ny = 0;
  double ox = 0.0, oy = 0.0;
  double ex = 0.0, ey = 0.0;

  double hx() const { return ex / nx; }
  double hy() const { return ey / ny; }
  double x(int i) const { return ox + i * hx(); }
  double y(int j) const { return oy + j * hy(); }
  double x_half(int i) const { return ox + (i + 0.5) * hx(); }
  double y_half(int j) const { return oy + (j + 0.5) * hy(); }
  int wx(int i) const {
    int m = i % nx;
    return m < 0 ? m + nx : m;
  }
  int wy(int j) const {
    int m = j % ny;
    return m < 0 ? m + ny : m;
  }
  bool operator==(const Grid2D&) const = default;
};

// Staggering tag. `half` marks 1D face values at x_{i+1/2}; `face_x`/`face_y`
// mark 2D face values at (x_{i+1/2}, y_j) and (x_i, y_{j+1/2}).
enum class Loc { cell, half, face_x, face_y };

struct Field1D {
  Grid1D grid;
  Loc loc = Loc::cell;
  std::vector<double> a;

  Field1D() = default;
  Field1D(const Grid1D& g, Loc l, double fill = 0.0)
      : grid(g), loc(l), a(static_cast<size_t>(g.n), fill) {}

  bool empty() const { return a.empty(); }
  int n() const { return grid.n; }
  double& operator[](int i) { return a[static_cast<size_t>(i)]; }
  double operator[](int i) const { return a[static_cast<size_t>(i)]; }
  // Periodic accessor.
  double at(int i) const { return a[static_cast<size_t>(grid.wrap(i))]; }
};

struct Field2D {
  Grid2D grid;
  Loc loc = Loc::cell;
  std::vector<double> a;

  Field2D() = default;
  Field2D(const Grid2D& g, Loc l, double fill = 0.0)
      : grid(g), loc(l), a(static_cast<size_t>(g.nx) * g.ny, fill) {}

  bool empty() const { return a.empty(); }
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * grid.ny + j; }
  double& operator()(int i, int j) { return a[idx(i, j)]; }
  double operator()(int i, int j) const { return a[idx(i, j)]; }
  // Periodic accessor.
  double at(int i, int j) const { return a[idx(grid.wx(i), grid.wy(j))]; }
};

// Fluid/solid geometry predicate. chi = 0 strictly inside the fluid region,
// 1 strictly outside, 1/2 within the interface band, 1/4 at a box corner.
// Intervals may be evaluated modulo a periodic extent so that bands touching
// the wrap point classify correctly.
class Geometry {
 public:
  static Geometry interval(double a, double b);
  static Geometry box(double x0, double x1, double y0, double y1);
  static Geometry annulus(double cx, double cy, double r_in, double r_out);
  static Geometry disk(double cx, double cy, double r);
  static Geometry complement(Geometry inner);

  Geometry with_tolerance(double eps) const;
  Geometry with_period(double period) const;

  double tolerance() const { return eps_; }

  double mask_at(double x) const;
  double mask_at(double x, double y) const;

 private:
  enum class Kind { interval, box, annulus, disk, complement };
  Geometry(Kind k, double p0, double p1, double p2, double p3);

  Kind kind_;
  double p_[4] = {0, 0, 0, 0};
  std::shared_ptr<const Geometry> inner_;
  double eps_ = 0.0;    // interface band half-width
  double period_ = 0.0; // 1D wrap length, 0 = none
};

// Free-function form of the geometry predicate.
double mask_at(const Geometry& g, double x);
double mask_at(const Geometry& g, double x, double y);

// Sample the analytic mask at the requested staggering. Face values come from
// direct evaluation at face centers, never from interpolating nodal values.
Field1D make_mask(const Grid1D& grid, const Geometry& g, Loc loc = Loc::cell);
Field2D make_mask(const Grid2D& grid, const Geometry& g, Loc loc = Loc::cell);

// theta = 1 - chi + eta*chi at the mask's own locations.
Field1D theta_field(const Field1D& mask, double eta);
Field2D theta_field(const Field2D& mask, double eta);

// Fluid-restricted quadrature: rectangle sum over nodes with chi <= 1/2 at
// full weight h (hx*hy in 2D). Interface nodes count fully; this quadrature
// is what the zero-mean constraint of the Neumann solver enforces, and its
// O(h) defect on non-symmetric data is a deliberate property, not a bug.
double integrate_fluid(const Field1D& field, const Field1D& mask);
double integrate_fluid(const Field2D& field, const Field2D& mask);

inline bool is_fluid(double chi) { return chi <= 0.5; }

}  // namespace penalap
