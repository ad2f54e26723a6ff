#include "mm/shape.hpp"

#include <cmath>

namespace mm {
namespace {

struct SphereJets {
  // Unit-sphere direction and its chart derivatives at (theta, phi).
  Vec3 s, s_u, s_v, s_uu, s_uv, s_vv;
  SphereJets(double th, double ph) {
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    s = Vec3(st * cp, st * sp, ct);
    s_u = Vec3(ct * cp, ct * sp, -st);
    s_v = Vec3(-st * sp, st * cp, 0.0);
    s_uu = -s;
    s_uv = Vec3(-ct * sp, ct * cp, 0.0);
    s_vv = Vec3(-st * cp, -st * sp, 0.0);
  }
};

class SphereSurface final : public AnalyticSurface {
 public:
  explicit SphereSurface(double r) : r_(r) {}
  SurfaceJet jet(double u, double v) const override {
    SphereJets d(u, v);
    SurfaceJet j;
    j.r = r_ * d.s;
    j.r_u = r_ * d.s_u;
    j.r_v = r_ * d.s_v;
    j.r_uu = r_ * d.s_uu;
    j.r_uv = r_ * d.s_uv;
    j.r_vv = r_ * d.s_vv;
    return j;
  }

 private:
  double r_;
};

class EllipsoidSurface final : public AnalyticSurface {
 public:
  EllipsoidSurface(double a, double b, double c) : axes_(a, b, c) {}
  SurfaceJet jet(double u, double v) const override {
    SphereJets d(u, v);
    SurfaceJet j;
    j.r = axes_.cwiseProduct(d.s);
    j.r_u = axes_.cwiseProduct(d.s_u);
    j.r_v = axes_.cwiseProduct(d.s_v);
    j.r_uu = axes_.cwiseProduct(d.s_uu);
    j.r_uv = axes_.cwiseProduct(d.s_uv);
    j.r_vv = axes_.cwiseProduct(d.s_vv);
    return j;
  }

 private:
  Vec3 axes_;
};

// u = major angle, v = minor angle; this ordering makes S_u x S_v outward.
class TorusSurface final : public AnalyticSurface {
 public:
  TorusSurface(double major, double minor) : a_(major), b_(minor) {}
  SurfaceJet jet(double u, double v) const override {
    const double cu = std::cos(u), su = std::sin(u);
    const double cv = std::cos(v), sv = std::sin(v);
    const double w = a_ + b_ * cv;
    SurfaceJet j;
    j.r = Vec3(w * cu, w * su, b_ * sv);
    j.r_u = Vec3(-w * su, w * cu, 0.0);
    j.r_v = Vec3(-b_ * sv * cu, -b_ * sv * su, b_ * cv);
    j.r_uu = Vec3(-w * cu, -w * su, 0.0);
    j.r_uv = Vec3(b_ * sv * su, -b_ * sv * cu, 0.0);
    j.r_vv = Vec3(-b_ * cv * cu, -b_ * cv * su, -b_ * sv);
    return j;
  }

 private:
  double a_, b_;
};

class GraphSurface final : public AnalyticSurface {
 public:
  explicit GraphSurface(std::function<void(double, double, double*)> f) : f_(std::move(f)) {}
  SurfaceJet jet(double u, double v) const override {
    double d[6];
    f_(u, v, d);
    SurfaceJet j;
    j.r = Vec3(u, v, d[0]);
    j.r_u = Vec3(1.0, 0.0, d[1]);
    j.r_v = Vec3(0.0, 1.0, d[2]);
    j.r_uu = Vec3(0.0, 0.0, d[3]);
    j.r_uv = Vec3(0.0, 0.0, d[4]);
    j.r_vv = Vec3(0.0, 0.0, d[5]);
    return j;
  }

 private:
  std::function<void(double, double, double*)> f_;
};

class RadialGraphSurface final : public AnalyticSurface {
 public:
  explicit RadialGraphSurface(std::function<void(double, double, double*)> f) : f_(std::move(f)) {}
  SurfaceJet jet(double u, double v) const override {
    double d[6];
    f_(u, v, d);
    const double p = d[0], p_u = d[1], p_v = d[2], p_uu = d[3], p_uv = d[4], p_vv = d[5];
    SphereJets s(u, v);
    SurfaceJet j;
    j.r = p * s.s;
    j.r_u = p_u * s.s + p * s.s_u;
    j.r_v = p_v * s.s + p * s.s_v;
    j.r_uu = p_uu * s.s + 2.0 * p_u * s.s_u + p * s.s_uu;
    j.r_uv = p_uv * s.s + p_u * s.s_v + p_v * s.s_u + p * s.s_uv;
    j.r_vv = p_vv * s.s + 2.0 * p_v * s.s_v + p * s.s_vv;
    return j;
  }

 private:
  std::function<void(double, double, double*)> f_;
};

}  // namespace

ShapeSpec ShapeSpec::sphere(double radius) {
  ShapeSpec s;
  s.kind = ShapeKind::Sphere;
  s.radius = radius;
  s.validate();
  return s;
}

ShapeSpec ShapeSpec::torus(double major, double minor) {
  ShapeSpec s;
  s.kind = ShapeKind::Torus;
  s.major = major;
  s.minor = minor;
  s.validate();
  return s;
}

ShapeSpec ShapeSpec::ellipsoid(double a, double b, double c) {
  ShapeSpec s;
  s.kind = ShapeKind::Ellipsoid;
  s.a = a;
  s.b = b;
  s.c = c;
  s.validate();
  return s;
}

ShapeSpec ShapeSpec::graph_patch(std::function<void(double, double, double*)> derivs) {
  ShapeSpec s;
  s.kind = ShapeKind::GraphPatch;
  s.graph = std::move(derivs);
  return s;
}

ShapeSpec ShapeSpec::radial_graph(std::function<void(double, double, double*)> derivs) {
  ShapeSpec s;
  s.kind = ShapeKind::RadialGraph;
  s.radial = std::move(derivs);
  return s;
}

ShapeSpec ShapeSpec::bumpy_sphere(double r0, double eps, int ku, int kv) {
  if (!(r0 > 0.0) || std::abs(eps) >= 1.0) throw Error("bumpy_sphere: need r0 > 0, |eps| < 1");
  return radial_graph([r0, eps, ku, kv](double th, double ph, double* d) {
    const double cu = std::cos(ku * th), su = std::sin(ku * th);
    const double cv = std::cos(kv * ph), sv = std::sin(kv * ph);
    d[0] = r0 * (1.0 + eps * cu * cv);
    d[1] = -r0 * eps * ku * su * cv;
    d[2] = -r0 * eps * kv * cu * sv;
    d[3] = -r0 * eps * ku * ku * cu * cv;
    d[4] = r0 * eps * ku * kv * su * sv;
    d[5] = -r0 * eps * kv * kv * cu * cv;
  });
}

void ShapeSpec::validate() const {
  switch (kind) {
    case ShapeKind::Sphere:
      if (!(radius > 0.0)) throw Error("sphere: radius must be positive");
      break;
    case ShapeKind::Torus:
      if (!(major > 0.0) || !(minor > 0.0)) throw Error("torus: radii must be positive");
      if (!(minor < major)) throw Error("torus: minor radius must be below major radius");
      break;
    case ShapeKind::Ellipsoid:
      if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) throw Error("ellipsoid: axes must be positive");
      break;
    case ShapeKind::GraphPatch:
      if (!graph) throw Error("graph patch: missing height function");
      break;
    case ShapeKind::RadialGraph:
      if (!radial) throw Error("radial graph: missing radius function");
      break;
  }
}

std::unique_ptr<AnalyticSurface> make_surface(const ShapeSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ShapeKind::Sphere:
      return std::make_unique<SphereSurface>(spec.radius);
    case ShapeKind::Torus:
      return std::make_unique<TorusSurface>(spec.major, spec.minor);
    case ShapeKind::Ellipsoid:
      return std::make_unique<EllipsoidSurface>(spec.a, spec.b, spec.c);
    case ShapeKind::GraphPatch:
      return std::make_unique<GraphSurface>(spec.graph);
    case ShapeKind::RadialGraph:
      return std::make_unique<RadialGraphSurface>(spec.radial);
  }
  throw Error("make_surface: unknown shape");
}

ChartGrid latlong_chart(int n, int mask_rows) { return latlong_chart_uv(n + 1, 2 * n, mask_rows); }

ChartGrid latlong_chart_uv(int n_u, int n_v, int mask_rows) {
  const double pi = M_PI;
  ChartGrid g(n_u, n_v, pi / (n_u - 1), 2.0 * pi / n_v, false, true);
  for (int k = 0; k < mask_rows; ++k) {
    g.mask_row_u(k);
    g.mask_row_u(n_u - 1 - k);
  }
  return g;
}

ChartGrid torus_chart(int n) { return torus_chart_uv(n, n); }

ChartGrid torus_chart_uv(int n_u, int n_v) {
  const double pi = M_PI;
  return ChartGrid(n_u, n_v, 2.0 * pi / n_u, 2.0 * pi / n_v, true, true);
}

ChartGrid periodic_patch_chart(int n_u, int n_v, double len_u, double len_v) {
  return ChartGrid(n_u, n_v, len_u / n_u, len_v / n_v, true, true);
}

ChartGrid default_chart(const ShapeSpec& spec, int n) {
  switch (spec.kind) {
    case ShapeKind::Torus:
      return torus_chart(n);
    case ShapeKind::GraphPatch:
      return periodic_patch_chart(n, n, 2.0 * M_PI, 2.0 * M_PI);
    default:
      return latlong_chart(n);
  }
}

Vec3Field embed(const ChartGrid& chart, const ShapeSpec& spec) {
  spec.validate();
  const bool latlong_like = spec.kind == ShapeKind::Sphere || spec.kind == ShapeKind::Ellipsoid ||
                            spec.kind == ShapeKind::RadialGraph;
  if (spec.kind == ShapeKind::Torus && !(chart.periodic(0) && chart.periodic(1)))
    throw Error("embed: torus requires a doubly periodic chart");
  if (latlong_like && chart.periodic(0))
    throw Error("embed: lat-long shapes require a bounded colatitude axis");
  auto surf = make_surface(spec);
  return embed(chart, *surf);
}

Vec3Field embed(const ChartGrid& chart, const AnalyticSurface& surface) {
  Vec3Field r(chart.size(), 3);
  for (int iu = 0; iu < chart.n_u(); ++iu)
    for (int iv = 0; iv < chart.n_v(); ++iv)
      r.row(chart.index(iu, iv)) = surface.position(chart.u(iu), chart.v(iv)).transpose();
  if (!r.allFinite()) throw Error("embed: non-finite position produced");
  return r;
}

}  // namespace mm
