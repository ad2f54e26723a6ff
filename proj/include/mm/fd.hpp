#pragma once

#include "mm/grid.hpp"
#include "mm/stencil.hpp"
#include "mm/types.hpp"

namespace mm {

/// Chart-axis partial derivative of a scalar field. Fourth-order centered
/// stencils on periodic lines; fourth-order edge-biased stencils inside
/// bounded or masked runs. Masked nodes yield zero.
ScalarField d_chart(const ChartGrid& grid, const ScalarField& f, int axis);

Vec3Field d_chart(const ChartGrid& grid, const Vec3Field& f, int axis);

/// Box-axis partial derivative (deriv = 1 or 2), fourth order.
ScalarField d_box(const BoxGrid3& grid, const ScalarField& f, int axis, int deriv = 1);

Vec3Field d_box(const BoxGrid3& grid, const Vec3Field& f, int axis, int deriv = 1);

}  // namespace mm
