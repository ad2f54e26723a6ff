#pragma once

#include <array>
#include <vector>

#include "mm/errors.hpp"
#include "mm/types.hpp"

namespace mm {

/// Contiguous run of valid nodes along one grid line.
struct Segment {
  int lo = 0;      // first valid node index along the axis
  int len = 0;     // run length
  bool wraps = false;  // whole periodic line is valid
};

/// Structured 2-parameter sample grid for the surface coordinates, with
/// per-axis periodicity and a node validity mask (false = excluded, e.g.
/// the polar rows of a lat-long chart).
class ChartGrid {
 public:
  ChartGrid(int n_u, int n_v, double h_u, double h_v, bool periodic_u, bool periodic_v,
            double u0 = 0.0, double v0 = 0.0);

  int n_u() const { return n_u_; }
  int n_v() const { return n_v_; }
  double h(int axis) const { return axis == 0 ? h_u_ : h_v_; }
  double h_u() const { return h_u_; }
  double h_v() const { return h_v_; }
  bool periodic(int axis) const { return axis == 0 ? periodic_u_ : periodic_v_; }

  Eigen::Index size() const { return static_cast<Eigen::Index>(n_u_) * n_v_; }
  Eigen::Index index(int iu, int iv) const { return static_cast<Eigen::Index>(iu) * n_v_ + iv; }
  double u(int iu) const { return u0_ + iu * h_u_; }
  double v(int iv) const { return v0_ + iv * h_v_; }

  bool valid(Eigen::Index node) const { return valid_[node]; }
  bool valid(int iu, int iv) const { return valid_[index(iu, iv)]; }
  void mask_row_u(int iu);  // invalidate one full u-row (all v at fixed iu)
  void set_valid(Eigen::Index node, bool ok) { valid_[node] = ok; }
  Eigen::Index valid_count() const;

  /// Lines along `axis`: count and memory stride of consecutive nodes.
  int lines(int axis) const { return axis == 0 ? n_v_ : n_u_; }
  int line_length(int axis) const { return axis == 0 ? n_u_ : n_v_; }
  Eigen::Index line_start(int axis, int line) const {
    return axis == 0 ? static_cast<Eigen::Index>(line) : static_cast<Eigen::Index>(line) * n_v_;
  }
  Eigen::Index line_stride(int axis) const { return axis == 0 ? n_v_ : 1; }

  /// Valid runs along one line (single wrapping run on fully valid
  /// periodic lines).
  std::vector<Segment> segments(int axis, int line) const;

 private:
  int n_u_, n_v_;
  double h_u_, h_v_;
  double u0_, v0_;
  bool periodic_u_, periodic_v_;
  Eigen::Array<bool, Eigen::Dynamic, 1> valid_;
};

/// Per-node quadrature weights: h_u*h_v scaled by end-corrected
/// (Gregory order-4) axis rules on bounded runs; zero on masked nodes.
ScalarField quadrature_weights(const ChartGrid& grid);

/// True where a node is valid and at least `depth` nodes away (along each
/// axis) from any masked node or non-periodic chart edge. Used to restrict
/// pointwise comparisons to nodes whose whole stencil chain is centered.
Eigen::Array<bool, Eigen::Dynamic, 1> interior_mask(const ChartGrid& grid, int depth);

/// Max |f| over valid nodes (optionally restricted by an extra mask).
double masked_max(const ChartGrid& grid, const ScalarField& f);
double masked_max(const ChartGrid& grid, const ScalarField& f,
                  const Eigen::Array<bool, Eigen::Dynamic, 1>& restrict_to);

/// Rectilinear 3-D sample grid for ambient-flow fields.
class BoxGrid3 {
 public:
  BoxGrid3(std::array<int, 3> n, std::array<double, 3> h, std::array<bool, 3> periodic,
           std::array<double, 3> origin = {0.0, 0.0, 0.0});

  int n(int axis) const { return n_[axis]; }
  double h(int axis) const { return h_[axis]; }
  bool periodic(int axis) const { return periodic_[axis]; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(n_[0]) * n_[1] * n_[2]; }
  Eigen::Index index(int i, int j, int k) const {
    return (static_cast<Eigen::Index>(i) * n_[1] + j) * n_[2] + k;
  }
  Vec3 point(int i, int j, int k) const {
    return Vec3(origin_[0] + i * h_[0], origin_[1] + j * h_[1], origin_[2] + k * h_[2]);
  }

  int lines(int axis) const;
  Eigen::Index line_start(int axis, int line) const;
  Eigen::Index line_stride(int axis) const;

 private:
  std::array<int, 3> n_;
  std::array<double, 3> h_;
  std::array<bool, 3> periodic_;
  std::array<double, 3> origin_;
};

}  // namespace mm
