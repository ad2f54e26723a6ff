#pragma once

#include <functional>
#include <memory>
#include <string>

#include "mm/grid.hpp"
#include "mm/types.hpp"

namespace mm {

/// Exact embedding data at one chart point: position and partial
/// derivatives up to second order.
struct SurfaceJet {
  Vec3 r = Vec3::Zero();
  Vec3 r_u = Vec3::Zero();
  Vec3 r_v = Vec3::Zero();
  Vec3 r_uu = Vec3::Zero();
  Vec3 r_uv = Vec3::Zero();
  Vec3 r_vv = Vec3::Zero();
};

/// Analytic parametric surface. Charts are oriented so S_u x S_v points
/// outward on closed shapes (upward for graph patches).
class AnalyticSurface {
 public:
  virtual ~AnalyticSurface() = default;
  virtual SurfaceJet jet(double u, double v) const = 0;
  Vec3 position(double u, double v) const { return jet(u, v).r; }
};

enum class ShapeKind { Sphere, Torus, Ellipsoid, GraphPatch, RadialGraph };

/// Enumerated analytic shape with parameter values.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Sphere;
  double radius = 1.0;                      // sphere
  double major = 2.0, minor = 0.5;          // torus
  double a = 1.0, b = 1.0, c = 1.0;         // ellipsoid
  std::function<void(double, double, double*)> graph;  // graph patch z(x,y): value + 5 derivatives
  std::function<void(double, double, double*)> radial; // radial graph r(theta,phi)

  static ShapeSpec sphere(double radius);
  static ShapeSpec torus(double major, double minor);
  static ShapeSpec ellipsoid(double a, double b, double c);
  /// z = f(x,y); `derivs` fills {f, f_x, f_y, f_xx, f_xy, f_yy}.
  static ShapeSpec graph_patch(std::function<void(double, double, double*)> derivs);
  /// r = r(theta,phi) about the origin; same 6-slot derivative layout.
  static ShapeSpec radial_graph(std::function<void(double, double, double*)> derivs);
  /// r = r0 (1 + eps cos(ku*theta) cos(kv*phi)) bump family.
  static ShapeSpec bumpy_sphere(double r0, double eps, int ku, int kv);

  void validate() const;
};

std::unique_ptr<AnalyticSurface> make_surface(const ShapeSpec& spec);

/// Lat-long chart: u = theta in [0,pi] (bounded, `mask_rows` polar rows
/// masked at each end), v = phi in [0,2pi) periodic. Resolution n gives
/// spacing pi/n on both axes.
ChartGrid latlong_chart(int n, int mask_rows = 2);
ChartGrid latlong_chart_uv(int n_u, int n_v, int mask_rows = 2);

/// Doubly periodic chart over [0,2pi)^2 (u = major angle, v = minor).
ChartGrid torus_chart(int n);
ChartGrid torus_chart_uv(int n_u, int n_v);

/// Doubly periodic planar chart over [0,len_u) x [0,len_v).
ChartGrid periodic_patch_chart(int n_u, int n_v, double len_u, double len_v);

/// Chart suited to the shape's topology.
ChartGrid default_chart(const ShapeSpec& spec, int n);

/// Sample positions on the chart. Throws on chart/topology mismatch.
Vec3Field embed(const ChartGrid& chart, const ShapeSpec& spec);
Vec3Field embed(const ChartGrid& chart, const AnalyticSurface& surface);

}  // namespace mm
