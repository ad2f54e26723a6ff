#include "mm/fd.hpp"

#include <cmath>

namespace mm {
namespace {

void derive_line_periodic(const Stencil& st, const double* f, double* out, Eigen::Index start,
                          Eigen::Index stride, int len, double inv_h) {
  const int m = static_cast<int>(st.offsets.size());
  for (int i = 0; i < len; ++i) {
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
      int k = i + st.offsets[j];
      if (k < 0) k += len;
      if (k >= len) k -= len;
      acc += static_cast<double>(st.numer[j]) * f[start + stride * k];
    }
    out[start + stride * i] = acc / static_cast<double>(st.denom) * inv_h;
  }
}

void derive_line_bounded(const StencilFamily& fam, const double* f, double* out,
                         Eigen::Index start, Eigen::Index stride, const Segment& seg,
                         double inv_h) {
  if (seg.len < fam.min_run())
    throw StencilError("finite differences: fewer than stencil-width valid nodes in run");
  for (int p = 0; p < seg.len; ++p) {
    const Stencil& st = fam.at(p, seg.len);
    const Eigen::Index node = start + stride * (seg.lo + p);
    out[node] = st.apply(f + node, stride, inv_h);
  }
}

template <typename GridT>
ScalarField derive_scalar(const GridT& grid, const ScalarField& f, int axis,
                          const StencilFamily& fam, double inv_h) {
  ScalarField out = ScalarField::Zero(f.size());
  const int len = grid.line_length(axis);
  const Eigen::Index stride = grid.line_stride(axis);
  for (int line = 0; line < grid.lines(axis); ++line) {
    const Eigen::Index start = grid.line_start(axis, line);
    for (const Segment& seg : grid.segments(axis, line)) {
      if (seg.wraps)
        derive_line_periodic(fam.centered(), f.data(), out.data(), start, stride, len, inv_h);
      else
        derive_line_bounded(fam, f.data(), out.data(), start, stride, seg, inv_h);
    }
  }
  return out;
}

}  // namespace

ScalarField d_chart(const ChartGrid& grid, const ScalarField& f, int axis) {
  return derive_scalar(grid, f, axis, StencilFamily::d1_order4(), 1.0 / grid.h(axis));
}

Vec3Field d_chart(const ChartGrid& grid, const Vec3Field& f, int axis) {
  Vec3Field out(f.rows(), 3);
  for (int c = 0; c < 3; ++c) out.col(c) = d_chart(grid, ScalarField(f.col(c).array()), axis);
  return out;
}

ScalarField d_box(const BoxGrid3& grid, const ScalarField& f, int axis, int deriv) {
  const StencilFamily& fam =
      deriv == 1 ? StencilFamily::d1_order4() : StencilFamily::d2_order4();
  const double inv_h = deriv == 1 ? 1.0 / grid.h(axis) : 1.0 / (grid.h(axis) * grid.h(axis));
  const int len = grid.n(axis);
  if (len < fam.min_run())
    throw StencilError("finite differences: axis shorter than stencil width");
  ScalarField out = ScalarField::Zero(f.size());
  const Eigen::Index stride = grid.line_stride(axis);
  const Segment whole{0, len, false};
  for (int line = 0; line < grid.lines(axis); ++line) {
    const Eigen::Index start = grid.line_start(axis, line);
    if (grid.periodic(axis))
      derive_line_periodic(fam.centered(), f.data(), out.data(), start, stride, len, inv_h);
    else
      derive_line_bounded(fam, f.data(), out.data(), start, stride, whole, inv_h);
  }
  return out;
}

Vec3Field d_box(const BoxGrid3& grid, const Vec3Field& f, int axis, int deriv) {
  Vec3Field out(f.rows(), 3);
  for (int c = 0; c < 3; ++c)
    out.col(c) = d_box(grid, ScalarField(f.col(c).array()), axis, deriv);
  return out;
}

}  // namespace mm
