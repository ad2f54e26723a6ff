#pragma once

#include <Eigen/Dense>

namespace mm {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3 = Vector3<double>;
using Vec2 = Vector2<double>;
using Mat2 = Matrix2<double>;
using Mat3 = Matrix3<double>;

/// Per-node scalar field, flattened in grid node order.
using ScalarField = Eigen::ArrayXd;

/// Per-node ambient vector field, one row per node.
using Vec3Field = Eigen::Matrix<double, Eigen::Dynamic, 3>;

/// Per-node chart vector field (surface index a = 0,1).
struct Vec2Field {
  ScalarField c0, c1;

  Vec2Field() = default;
  explicit Vec2Field(Eigen::Index n) : c0(ScalarField::Zero(n)), c1(ScalarField::Zero(n)) {}

  Eigen::Index size() const { return c0.size(); }
  ScalarField& operator[](int a) { return a == 0 ? c0 : c1; }
  const ScalarField& operator[](int a) const { return a == 0 ? c0 : c1; }
  Vec2 at(Eigen::Index node) const { return Vec2(c0[node], c1[node]); }
  void set(Eigen::Index node, const Vec2& v) {
    c0[node] = v[0];
    c1[node] = v[1];
  }
};

/// Per-node 2x2 surface tensor field stored component-major so chart
/// derivatives act on plain scalar fields.
struct Mat2Field {
  std::array<ScalarField, 4> comp;  // (a,b) -> comp[2a+b]

  Mat2Field() = default;
  explicit Mat2Field(Eigen::Index n) {
    for (auto& c : comp) c = ScalarField::Zero(n);
  }

  Eigen::Index size() const { return comp[0].size(); }
  ScalarField& operator()(int a, int b) { return comp[2 * a + b]; }
  const ScalarField& operator()(int a, int b) const { return comp[2 * a + b]; }
  Mat2 at(Eigen::Index node) const {
    Mat2 m;
    m(0, 0) = comp[0][node];
    m(0, 1) = comp[1][node];
    m(1, 0) = comp[2][node];
    m(1, 1) = comp[3][node];
    return m;
  }
  void set(Eigen::Index node, const Mat2& m) {
    comp[0][node] = m(0, 0);
    comp[1][node] = m(0, 1);
    comp[2][node] = m(1, 0);
    comp[3][node] = m(1, 1);
  }
};

/// Rank-3 surface tensor field, e.g. Christoffel symbols or grad of a 2-tensor.
struct Ten3Field {
  std::array<ScalarField, 8> comp;  // (k,a,b) -> comp[4k+2a+b]

  Ten3Field() = default;
  explicit Ten3Field(Eigen::Index n) {
    for (auto& c : comp) c = ScalarField::Zero(n);
  }

  Eigen::Index size() const { return comp[0].size(); }
  ScalarField& operator()(int k, int a, int b) { return comp[4 * k + 2 * a + b]; }
  const ScalarField& operator()(int k, int a, int b) const { return comp[4 * k + 2 * a + b]; }
};

}  // namespace mm
