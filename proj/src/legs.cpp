#include "loco/legs.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace loco {

namespace {

Mat3 rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << 1, 0, 0, 0, c, -s, 0, s, c;
  return m;
}

Mat3 rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << c, 0, s, 0, 1, 0, -s, 0, c;
  return m;
}

}  // namespace

Vec3 forward_kinematics(const LegKinematics& legs, int leg, const Vec3& q) {
  const double d = legs.abd_sign(leg) * legs.l_abd;
  const Vec3 planar = rot_y(q.y()) * Vec3(0, 0, -legs.l_thigh) +
                      rot_y(q.y() + q.z()) * Vec3(0, 0, -legs.l_shank);
  return legs.hip_offsets[leg] + rot_x(q.x()) * (Vec3(0, d, 0) + planar);
}

Mat3 leg_jacobian(const LegKinematics& legs, int leg, const Vec3& q) {
  const double d = legs.abd_sign(leg) * legs.l_abd;
  const Vec3 thigh = rot_y(q.y()) * Vec3(0, 0, -legs.l_thigh);
  const Vec3 shank = rot_y(q.y() + q.z()) * Vec3(0, 0, -legs.l_shank);
  const Mat3 Rx = rot_x(q.x());
  const Vec3 in_hip = Vec3(0, d, 0) + thigh + shank;

  Mat3 J;
  // Roll joint: rotation of everything about x.
  J.col(0) = Vec3::UnitX().cross(Rx * in_hip);
  // Pitch joints rotate about the (rolled) y axis.
  const Vec3 axis_y = Rx * Vec3::UnitY();
  J.col(1) = axis_y.cross(Rx * (thigh + shank));
  J.col(2) = axis_y.cross(Rx * shank);
  return J;
}

IkResult inverse_kinematics(const LegKinematics& legs, int leg, const Vec3& p_foot) {
  IkResult out;
  const double d = legs.abd_sign(leg) * legs.l_abd;
  Vec3 p = p_foot - legs.hip_offsets[leg];

  // Roll from the (y, z) components: rotate until the abduction offset is
  // aligned, leaving a planar 2-link problem in x-z.
  double r_yz = std::hypot(p.y(), p.z());
  if (r_yz < std::abs(d) + 1e-9) {
    // Target inside the abduction cylinder: push it out radially.
    const double phi0 = (r_yz > 1e-12) ? std::atan2(p.z(), p.y()) : -M_PI / 2.0;
    r_yz = std::abs(d) + 1e-9;
    p.y() = r_yz * std::cos(phi0);
    p.z() = r_yz * std::sin(phi0);
    out.clamped = true;
  }
  const double phi = std::atan2(p.z(), p.y());
  const double q1 = phi + std::acos(std::clamp(d / r_yz, -1.0, 1.0));

  // Planar coordinates in the rolled frame.
  const double ux = p.x();
  const double uz = -std::sqrt(std::max(r_yz * r_yz - d * d, 0.0));
  const double lt = legs.l_thigh, ls = legs.l_shank;
  double D = (ux * ux + uz * uz - lt * lt - ls * ls) / (2.0 * lt * ls);
  if (D > 1.0 || D < -1.0) {
    D = std::clamp(D, -1.0, 1.0);
    out.clamped = true;
  }
  const double q3 = -std::acos(D);  // knee-backward branch
  const double q2 =
      std::atan2(-ux, -uz) - std::atan2(ls * std::sin(q3), lt + ls * std::cos(q3));

  out.q = Vec3(q1, q2, q3);
  // Normalize roll into (-pi, pi].
  if (out.q.x() > M_PI) out.q.x() -= 2.0 * M_PI;
  if (out.q.x() <= -M_PI) out.q.x() += 2.0 * M_PI;
  return out;
}

JointCommand stance_command(const LegKinematics& legs, int leg, const Vec3& q, const Vec3& qd,
                            const Vec3& f_world, const Mat3& R, const GainSchedule& gains,
                            TerrainMode mode, double torque_limit) {
  JointCommand cmd;
  const Mat3 J = leg_jacobian(legs, leg, q);
  cmd.tau_ff = J.transpose() * (-R.transpose() * f_world);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(cmd.tau_ff[i]) > torque_limit) {
      cmd.tau_ff[i] = std::copysign(torque_limit, cmd.tau_ff[i]);
      cmd.torque_clamped = true;
    }
  }
  cmd.q_des = q;
  cmd.qd_des = qd;
  cmd.kp = Vec3::Zero();
  cmd.kd = gains.kd(mode);

  Eigen::JacobiSVD<Mat3> svd(J);
  if (svd.singularValues()(2) < 1e-6) cmd.singular = true;
  return cmd;
}

JointCommand swing_command(const LegKinematics& legs, int leg, const Vec3& /*q*/,
                           const SwingTrajectory& traj, double t, const BodyState& body,
                           const GainSchedule& gains, TerrainMode mode) {
  JointCommand cmd;
  const Vec3 p_world = swing_position(traj, t);
  const Vec3 v_world = swing_velocity(traj, t);
  const Vec3 p_body = body.R.transpose() * (p_world - body.p);

  const IkResult ik = inverse_kinematics(legs, leg, p_body);
  cmd.q_des = ik.q;
  cmd.ik_clamped = ik.clamped;

  // Foot velocity relative to the body, expressed in the body frame.
  const Vec3 v_body = body.R.transpose() * (v_world - body.v) - body.w.cross(p_body);
  const Mat3 J = leg_jacobian(legs, leg, cmd.q_des);
  Eigen::FullPivLU<Mat3> lu(J);
  if (lu.isInvertible()) {
    cmd.qd_des = lu.solve(v_body);
  } else {
    cmd.qd_des = Vec3::Zero();
    cmd.singular = true;
  }

  cmd.kp = gains.kp_swing;
  cmd.kd = gains.kd(mode);
  return cmd;
}

}  // namespace loco
