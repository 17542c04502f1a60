#include "loco/so3.hpp"

#include <cmath>

namespace loco {

Vec3 vee(const Mat3& m, double tol) {
  const double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) throw std::invalid_argument("vee: input is not antisymmetric");
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

Vec3 rotation_error(const Mat3& R, const Mat3& R_ref) {
  const Mat3 m = 0.5 * (R_ref.transpose() * R - R.transpose() * R_ref);
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

Mat3 taylor3_poly(const Vec3& w, double dt) {
  const Mat3 W = hat(w) * dt;
  const Mat3 W2 = W * W;
  return Mat3::Identity() + W + 0.5 * W2 + (1.0 / 6.0) * W2 * W;
}

Mat3 integrate_rotation_taylor3(const Mat3& R, const Vec3& w, double dt) {
  return R * taylor3_poly(w, dt);
}

Mat3 orthonormalize(const Mat3& R) {
  Mat3 out;
  Vec3 c0 = R.col(0).normalized();
  Vec3 c1 = (R.col(1) - c0 * c0.dot(R.col(1))).normalized();
  Vec3 c2 = c0.cross(c1);
  out.col(0) = c0;
  out.col(1) = c1;
  out.col(2) = c2;
  return out;
}

Mat3 rot_z(double yaw) {
  const double c = std::cos(yaw), s = std::sin(yaw);
  Mat3 m;
  m << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return m;
}

Vec3 rpy_from_rotation(const Mat3& R) {
  // ZYX convention: R = Rz(yaw) Ry(pitch) Rx(roll).
  const double pitch = std::asin(std::clamp(-R(2, 0), -1.0, 1.0));
  const double roll = std::atan2(R(2, 1), R(2, 2));
  const double yaw = std::atan2(R(1, 0), R(0, 0));
  return Vec3(roll, pitch, yaw);
}

Mat3 rotation_from_rpy(const Vec3& rpy) {
  const double cr = std::cos(rpy.x()), sr = std::sin(rpy.x());
  const double cp = std::cos(rpy.y()), sp = std::sin(rpy.y());
  Mat3 Rx, Ry;
  Rx << 1, 0, 0, 0, cr, -sr, 0, sr, cr;
  Ry << cp, 0, sp, 0, 1, 0, -sp, 0, cp;
  return rot_z(rpy.z()) * Ry * Rx;
}

}  // namespace loco
