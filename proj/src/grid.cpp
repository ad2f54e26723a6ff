#include "mm/grid.hpp"

#include <algorithm>
#include <cmath>

namespace mm {

ChartGrid::ChartGrid(int n_u, int n_v, double h_u, double h_v, bool periodic_u, bool periodic_v,
                     double u0, double v0)
    : n_u_(n_u),
      n_v_(n_v),
      h_u_(h_u),
      h_v_(h_v),
      u0_(u0),
      v0_(v0),
      periodic_u_(periodic_u),
      periodic_v_(periodic_v) {
  if (n_u_ < 8 || n_v_ < 8) throw Error("ChartGrid: node counts must be >= 8");
  if (!(h_u_ > 0.0) || !(h_v_ > 0.0)) throw Error("ChartGrid: spacings must be positive");
  valid_ = Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(size(), true);
}

void ChartGrid::mask_row_u(int iu) {
  for (int iv = 0; iv < n_v_; ++iv) valid_[index(iu, iv)] = false;
}

Eigen::Index ChartGrid::valid_count() const {
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < valid_.size(); ++i)
    if (valid_[i]) ++c;
  return c;
}

std::vector<Segment> ChartGrid::segments(int axis, int line) const {
  const int len = line_length(axis);
  const Eigen::Index start = line_start(axis, line);
  const Eigen::Index stride = line_stride(axis);

  std::vector<Segment> runs;
  int i = 0;
  while (i < len) {
    if (!valid_[start + stride * i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j < len && valid_[start + stride * j]) ++j;
    runs.push_back({i, j - i, false});
    i = j;
  }
  if (periodic(axis) && runs.size() == 1 && runs[0].len == len) runs[0].wraps = true;
  return runs;
}

namespace {

// Gregory order-4 end correction of the trapezoid rule.
double gregory_weight(int pos, int len) {
  static const double end[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
  const int from_hi = len - 1 - pos;
  if (len >= 6) {
    if (pos < 3 && from_hi < 3) return end[pos] + end[from_hi] - 1.0;  // unreachable for len>=6
    if (pos < 3) return end[pos];
    if (from_hi < 3) return end[from_hi];
    return 1.0;
  }
  // short run: plain trapezoid
  return (pos == 0 || from_hi == 0) ? 0.5 : 1.0;
}

}  // namespace

ScalarField quadrature_weights(const ChartGrid& grid) {
  ScalarField wu = ScalarField::Zero(grid.size());
  for (int line = 0; line < grid.lines(0); ++line) {
    const Eigen::Index start = grid.line_start(0, line);
    const Eigen::Index stride = grid.line_stride(0);
    for (const Segment& s : grid.segments(0, line))
      for (int p = 0; p < s.len; ++p)
        wu[start + stride * (s.lo + p)] = s.wraps ? 1.0 : gregory_weight(p, s.len);
  }
  ScalarField w = ScalarField::Zero(grid.size());
  for (int line = 0; line < grid.lines(1); ++line) {
    const Eigen::Index start = grid.line_start(1, line);
    const Eigen::Index stride = grid.line_stride(1);
    for (const Segment& s : grid.segments(1, line))
      for (int p = 0; p < s.len; ++p) {
        const Eigen::Index node = start + stride * (s.lo + p);
        w[node] = wu[node] * (s.wraps ? 1.0 : gregory_weight(p, s.len));
      }
  }
  return w * (grid.h_u() * grid.h_v());
}

Eigen::Array<bool, Eigen::Dynamic, 1> interior_mask(const ChartGrid& grid, int depth) {
  Eigen::Array<bool, Eigen::Dynamic, 1> ok =
      Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(grid.size(), false);
  for (int axis = 0; axis < 2; ++axis) {
    for (int line = 0; line < grid.lines(axis); ++line) {
      const Eigen::Index start = grid.line_start(axis, line);
      const Eigen::Index stride = grid.line_stride(axis);
      for (const Segment& s : grid.segments(axis, line))
        for (int p = 0; p < s.len; ++p) {
          const Eigen::Index node = start + stride * (s.lo + p);
          const bool deep = s.wraps || (p >= depth && s.len - 1 - p >= depth);
          if (axis == 0)
            ok[node] = deep;
          else
            ok[node] = ok[node] && deep;
        }
    }
  }
  return ok;
}

double masked_max(const ChartGrid& grid, const ScalarField& f) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    if (grid.valid(i)) m = std::max(m, std::abs(f[i]));
  return m;
}

double masked_max(const ChartGrid& grid, const ScalarField& f,
                  const Eigen::Array<bool, Eigen::Dynamic, 1>& restrict_to) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    if (grid.valid(i) && restrict_to[i]) m = std::max(m, std::abs(f[i]));
  return m;
}

BoxGrid3::BoxGrid3(std::array<int, 3> n, std::array<double, 3> h, std::array<bool, 3> periodic,
                   std::array<double, 3> origin)
    : n_(n), h_(h), periodic_(periodic), origin_(origin) {
  for (int a = 0; a < 3; ++a) {
    if (n_[a] < 8) throw Error("BoxGrid3: node counts must be >= 8");
    if (!(h_[a] > 0.0)) throw Error("BoxGrid3: spacings must be positive");
  }
}

int BoxGrid3::lines(int axis) const {
  return static_cast<int>(size() / n_[axis]);
}

Eigen::Index BoxGrid3::line_start(int axis, int line) const {
  // Decompose `line` over the two non-differentiated axes.
  switch (axis) {
    case 0: {  // lines vary over (j,k)
      return line;  // start at i=0: index = (0*n1 + j)*n2 + k = line
    }
    case 1: {  // lines vary over (i,k)
      const int i = line / n_[2];
      const int k = line % n_[2];
      return (static_cast<Eigen::Index>(i) * n_[1]) * n_[2] + k;
    }
    default: {  // lines vary over (i,j)
      return static_cast<Eigen::Index>(line) * n_[2];
    }
  }
}

Eigen::Index BoxGrid3::line_stride(int axis) const {
  switch (axis) {
    case 0:
      return static_cast<Eigen::Index>(n_[1]) * n_[2];
    case 1:
      return n_[2];
    default:
      return 1;
  }
}

}  // namespace mm
