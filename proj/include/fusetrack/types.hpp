#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fusetrack {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat23 = Eigen::Matrix<double, 2, 3>;
using Mat34 = Eigen::Matrix<double, 3, 4>;

// Dense real/complex planes; row index is the vertical (v) axis, column
// index the horizontal (u) axis.
using Plane = Eigen::ArrayXXd;
using CPlane = Eigen::ArrayXXcd;

constexpr double kPi = 3.14159265358979323846;

}  // namespace fusetrack
