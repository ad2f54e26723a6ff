#include "mm/stencil.hpp"

#include <numeric>
#include <stdexcept>

namespace mm {
namespace {

// Minimal exact rational arithmetic for the Vandermonde solve. Offsets and
// point counts are single digits, so int64 never comes close to overflow.
struct Frac {
  std::int64_t n = 0, d = 1;

  void reduce() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
};

Frac frac(std::int64_t n, std::int64_t d = 1) {
  Frac f{n, d};
  f.reduce();
  return f;
}

Frac operator*(Frac a, Frac b) { return frac(a.n * b.n, a.d * b.d); }
Frac operator-(Frac a, Frac b) { return frac(a.n * b.d - b.n * a.d, a.d * b.d); }
Frac operator/(Frac a, Frac b) { return frac(a.n * b.d, a.d * b.n); }

}  // namespace

Stencil make_stencil(const std::vector<int>& offsets, int deriv) {
  const int n = static_cast<int>(offsets.size());
  if (deriv < 1 || deriv >= n) throw std::invalid_argument("make_stencil: bad derivative order");

  // Moment conditions: sum_j w_j o_j^p = p! delta_{p,deriv}.
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n + 1));
  for (int p = 0; p < n; ++p) {
    for (int j = 0; j < n; ++j) {
      std::int64_t pw = 1;
      for (int q = 0; q < p; ++q) pw *= offsets[j];
      a[p][j] = frac(pw);
    }
    std::int64_t rhs = 0;
    if (p == deriv) {
      rhs = 1;
      for (int q = 2; q <= p; ++q) rhs *= q;
    }
    a[p][n] = frac(rhs);
  }

  // Gaussian elimination with exact fractions.
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col].n == 0) ++piv;
    if (piv == n) throw std::invalid_argument("make_stencil: singular moment system");
    std::swap(a[col], a[piv]);
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col].n == 0) continue;
      Frac m = a[row][col] / a[col][col];
      for (int k = col; k <= n; ++k) a[row][k] = a[row][k] - m * a[col][k];
    }
  }

  std::vector<Frac> w(n);
  std::int64_t lcm = 1;
  for (int j = 0; j < n; ++j) {
    w[j] = a[j][n] / a[j][j];
    lcm = std::lcm(lcm, w[j].d);
  }

  Stencil s;
  s.offsets = offsets;
  s.deriv = deriv;
  s.denom = lcm;
  s.numer.resize(n);
  for (int j = 0; j < n; ++j) s.numer[j] = w[j].n * (lcm / w[j].d);
  return s;
}

StencilFamily::StencilFamily(int deriv, int accuracy) : deriv_(deriv) {
  npts_ = deriv + accuracy;
  if (npts_ % 2 == 0) ++npts_;  // symmetric window for the centered variant
  half_ = npts_ / 2;
  variants_.reserve(npts_);
  for (int anchor = 0; anchor < npts_; ++anchor) {
    std::vector<int> offs(npts_);
    for (int j = 0; j < npts_; ++j) offs[j] = j - anchor;
    variants_.push_back(make_stencil(offs, deriv));
  }
}

const Stencil& StencilFamily::at(int pos, int len) const {
  if (len < npts_) throw std::out_of_range("StencilFamily::at: run too short");
  int anchor = pos;
  if (anchor > half_) anchor = half_;
  if (pos > len - 1 - half_) anchor = npts_ - (len - pos);
  if (anchor < 0) anchor = 0;
  if (anchor > npts_ - 1) anchor = npts_ - 1;
  return variants_[anchor];
}

const StencilFamily& StencilFamily::d1_order4() {
  static const StencilFamily f(1, 4);
  return f;
}

const StencilFamily& StencilFamily::d2_order4() {
  static const StencilFamily f(2, 4);
  return f;
}

}  // namespace mm
