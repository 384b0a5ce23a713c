#pragma once

#include <cmath>

#include "fusetrack/errors.hpp"
#include "fusetrack/types.hpp"

namespace fusetrack {

// Depth below this is treated as behind the camera.
inline constexpr double kMinCameraDepth = 1e-6;

template <typename S>
struct CameraCalibrationT {
  Eigen::Matrix<S, 3, 3> intrinsics = Eigen::Matrix<S, 3, 3>::Identity();
  // Robot frame -> camera frame, [R|t] with translation in meters.
  Eigen::Matrix<S, 3, 4> extrinsics = Eigen::Matrix<S, 3, 4>::Identity();
  int image_width = 0;
  int image_height = 0;

  S fx() const { return intrinsics(0, 0); }
  S fy() const { return intrinsics(1, 1); }
  S cx() const { return intrinsics(0, 2); }
  S cy() const { return intrinsics(1, 2); }
  Eigen::Matrix<S, 3, 3> rotation() const { return extrinsics.template leftCols<3>(); }
  Eigen::Matrix<S, 3, 1> translation() const { return extrinsics.col(3); }

  void validate() const {
    if (!(fx() > S(0)) || !(fy() > S(0)))
      throw ConfigError("camera: focal lengths must be positive");
    if (cx() < S(0) || cx() >= S(image_width) || cy() < S(0) || cy() >= S(image_height))
      throw ConfigError("camera: principal point outside the image");
    const Eigen::Matrix<S, 3, 3> r = rotation();
    if (((r.transpose() * r) - Eigen::Matrix<S, 3, 3>::Identity()).cwiseAbs().maxCoeff() > S(1e-9))
      throw ConfigError("camera: rotation is not orthonormal");
    if (std::abs(r.determinant() - S(1)) > S(1e-9))
      throw ConfigError("camera: rotation determinant is not +1");
  }
};

using CameraCalibration = CameraCalibrationT<double>;

struct PersonModel {
  double height_m = 1.7;
  double width_m = 0.4;
  double emitter_ratio = 0.5;  // emitter-to-feet distance as a fraction of height

  void validate() const {
    if (!(height_m > 0.5 && height_m < 2.5))
      throw ConfigError("person: height outside (0.5, 2.5) m");
    if (!(width_m > 0)) throw ConfigError("person: width must be positive");
    if (!(emitter_ratio > 0 && emitter_ratio < 1))
      throw ConfigError("person: emitter_ratio outside (0, 1)");
  }
};

struct BoundingBox {
  double center_u = 0;
  double center_v = 0;
  double width = 0;   // current size, pixels
  double height = 0;  // current size, pixels
  double scale = 1;   // relative to initial size
};

template <typename S>
Eigen::Matrix<S, 3, 1> to_camera_frame(const Eigen::Matrix<S, 3, 1>& p,
                                       const CameraCalibrationT<S>& cal) {
  return cal.rotation() * p + cal.translation();
}

template <typename S>
Eigen::Matrix<S, 2, 1> project_point(const Eigen::Matrix<S, 3, 1>& p,
                                     const CameraCalibrationT<S>& cal) {
  const Eigen::Matrix<S, 3, 1> pc = to_camera_frame(p, cal);
  if (!(pc.z() > S(kMinCameraDepth)))
    throw PointBehindCamera("project_point: depth <= 1e-6 m");
  const Eigen::Matrix<S, 3, 1> h = cal.intrinsics * pc;
  return {h.x() / h.z(), h.y() / h.z()};
}

template <typename S>
struct PersonAnchors {
  Eigen::Matrix<S, 3, 1> left, right, head, feet;
};

// Offsets live purely in the y (lateral) and z (vertical) axes of the robot
// frame; the emitter sits emitter_ratio * height above the feet.
template <typename S>
PersonAnchors<S> person_anchor_points(const Eigen::Matrix<S, 3, 1>& emitter,
                                      const PersonModel& person) {
  PersonAnchors<S> a;
  const S half_w = S(person.width_m) / S(2);
  const S up = S(person.emitter_ratio * person.height_m);
  a.left = emitter + Eigen::Matrix<S, 3, 1>(S(0), half_w, S(0));
  a.right = emitter + Eigen::Matrix<S, 3, 1>(S(0), -half_w, S(0));
  a.head = emitter + Eigen::Matrix<S, 3, 1>(S(0), S(0), up);
  a.feet = emitter + Eigen::Matrix<S, 3, 1>(S(0), S(0), -up);
  return a;
}

template <typename S>
BoundingBox initial_bbox(const Eigen::Matrix<S, 3, 1>& x_init, const PersonModel& person,
                         const CameraCalibrationT<S>& cal) {
  const auto anchors = person_anchor_points(x_init, person);
  const auto ul = project_point(anchors.left, cal);
  const auto ur = project_point(anchors.right, cal);
  const auto vh = project_point(anchors.head, cal);
  const auto vf = project_point(anchors.feet, cal);
  BoundingBox box;
  box.width = static_cast<double>(ur.x() - ul.x());
  box.height = static_cast<double>(vf.y() - vh.y());
  box.center_u = static_cast<double>((ul.x() + ur.x()) / S(2));
  box.center_v = static_cast<double>((vf.y() + vh.y()) / S(2));
  box.scale = 1.0;
  if (!(box.width > 0) || !(box.height > 0))
    throw DegenerateBox("initial_bbox: non-positive projected size");
  return box;
}

// Derivative of the dehomogenized projection with respect to the robot-frame
// position.
template <typename S>
Eigen::Matrix<S, 2, 3> camera_jacobian(const Eigen::Matrix<S, 3, 1>& p,
                                       const CameraCalibrationT<S>& cal) {
  const Eigen::Matrix<S, 3, 1> pc = to_camera_frame(p, cal);
  if (!(pc.z() > S(kMinCameraDepth)))
    throw PointBehindCamera("camera_jacobian: depth <= 1e-6 m");
  const Eigen::Matrix<S, 3, 3> r = cal.rotation();
  const S z = pc.z();
  const S inv_z = S(1) / z;
  // d(u)/d(pc) = [fx/z, 0, -fx*x/z^2], then chain through pc = R p + t.
  Eigen::Matrix<S, 2, 3> d_pix_d_pc;
  d_pix_d_pc << cal.fx() * inv_z, S(0), -cal.fx() * pc.x() * inv_z * inv_z,
      S(0), cal.fy() * inv_z, -cal.fy() * pc.y() * inv_z * inv_z;
  return d_pix_d_pc * r;
}

}  // namespace fusetrack
