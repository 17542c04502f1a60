#pragma once

#include "loco/types.hpp"

namespace loco {

/// w -> [w], the skew-symmetric matrix with hat(w) * u == w x u.
inline Mat3 hat(const Vec3& w) {
  Mat3 m;
  m << 0.0, -w.z(), w.y(),
      w.z(), 0.0, -w.x(),
      -w.y(), w.x(), 0.0;
  return m;
}

/// Inverse of hat. Rejects matrices that are not antisymmetric within tol.
Vec3 vee(const Mat3& m, double tol = 1e-8);

/// Sin-weighted axis-angle orientation error, vee(0.5 * (Rref^T R - R^T Rref)).
/// Zero iff R == Rref; for a z-rotation by theta against identity this is
/// [0, 0, sin(theta)].
Vec3 rotation_error(const Mat3& R, const Mat3& R_ref);

/// One step of the rotation update using the 3rd-order Taylor polynomial of
/// the matrix exponential: R * (I + [w]dt + 1/2 [w]^2 dt^2 + 1/6 [w]^3 dt^3).
/// Returned matrix is the raw polynomial product (not re-orthonormalized) so
/// that analytic derivatives of the prediction model match it exactly.
Mat3 integrate_rotation_taylor3(const Mat3& R, const Vec3& w, double dt);

/// The bare polynomial I + [w]dt + 1/2 [w]^2 dt^2 + 1/6 [w]^3 dt^3.
Mat3 taylor3_poly(const Vec3& w, double dt);

/// Gram-Schmidt re-orthonormalization (column-wise); used by the simulator
/// after every integration step.
Mat3 orthonormalize(const Mat3& R);

/// Yaw rotation about world z.
Mat3 rot_z(double yaw);

/// ZYX Euler angles (roll, pitch, yaw) of a rotation matrix.
Vec3 rpy_from_rotation(const Mat3& R);

Mat3 rotation_from_rpy(const Vec3& rpy);

}  // namespace loco
