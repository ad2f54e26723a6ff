#pragma once

#include <cstdint>
#include <vector>

namespace mm {

/// Finite-difference weights for one derivative at one evaluation point.
///
/// Weights are stored as integer numerators over a common denominator so a
/// stencil applied to a constant field sums to exactly zero in floating
/// point. The derivative of f at node i is
///   sum_j numer[j] * f[i + offsets[j]] / (denom * h^deriv).
struct Stencil {
  std::vector<int> offsets;
  std::vector<std::int64_t> numer;
  std::int64_t denom = 1;
  int deriv = 1;

  double apply(const double* line, std::ptrdiff_t stride, double inv_h_pow) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < offsets.size(); ++j)
      acc += static_cast<double>(numer[j]) * line[stride * offsets[j]];
    return acc / static_cast<double>(denom) * inv_h_pow;
  }
};

/// Exact-rational solve of the Vandermonde moment system
///   sum_j w_j offset_j^p = p! delta_{p,deriv},  p = 0..npoints-1,
/// giving weights of order npoints - deriv.
Stencil make_stencil(const std::vector<int>& offsets, int deriv);

/// Stencil family for one derivative order and accuracy order 4 on a
/// uniform line: centered interior stencil plus edge-biased variants.
///
/// `at(pos, len)` picks the stencil for node `pos` in a contiguous run of
/// `len` valid nodes; offsets are relative to the node.
class StencilFamily {
 public:
  StencilFamily(int deriv, int accuracy);

  int points() const { return npts_; }
  int deriv() const { return deriv_; }
  /// Minimum run length this family can differentiate.
  int min_run() const { return npts_; }

  const Stencil& at(int pos, int len) const;
  const Stencil& centered() const { return variants_[half_]; }

  static const StencilFamily& d1_order4();
  static const StencilFamily& d2_order4();

 private:
  int deriv_;
  int npts_;
  int half_;
  std::vector<Stencil> variants_;  // anchored at window position 0..npts-1
};

}  // namespace mm
