#pragma once

#include "loco/swing.hpp"
#include "loco/types.hpp"

namespace loco {

/// 3-DoF point-foot leg: hip roll (about +x), hip pitch (about +y), knee
/// pitch (about +y). The abduction link points sideways (+y on left legs,
/// -y on right legs); thigh and shank hang along -z at q = 0.
struct LegKinematics {
  std::array<Vec3, 4> hip_offsets;
  double l_abd;
  double l_thigh;
  double l_shank;
  // Per-joint [min, max], same for every leg.
  std::array<Vec2, 3> joint_limits = {Vec2(-0.9, 0.9), Vec2(-1.8, 1.8), Vec2(-2.72, -0.08)};

  static LegKinematics from_params(const RobotParams& p) {
    return LegKinematics{p.hip_offsets, p.link_abduction, p.link_thigh, p.link_shank, {}};
  }

  double abd_sign(int leg) const { return is_left(leg) ? 1.0 : -1.0; }
  double max_reach() const { return l_thigh + l_shank; }
};

struct IkResult {
  Vec3 q;
  bool clamped = false;  ///< target was outside the workspace and got projected
};

/// Body-frame foot position (includes the hip offset).
Vec3 forward_kinematics(const LegKinematics& legs, int leg, const Vec3& q);

/// d(foot position)/dq, body frame.
Mat3 leg_jacobian(const LegKinematics& legs, int leg, const Vec3& q);

/// Closed-form IK, knee-backward branch. Unreachable targets are projected
/// onto the workspace boundary and flagged.
IkResult inverse_kinematics(const LegKinematics& legs, int leg, const Vec3& p_foot);

/// Joint-level command for one leg: feedforward torque plus a position /
/// velocity target tracked by the motor PD with the given gains.
struct JointCommand {
  Vec3 tau_ff = Vec3::Zero();
  Vec3 q_des = Vec3::Zero();
  Vec3 qd_des = Vec3::Zero();
  Vec3 kp = Vec3::Zero();
  Vec3 kd = Vec3::Zero();
  bool torque_clamped = false;
  bool ik_clamped = false;
  bool singular = false;
};

enum class TerrainMode { kFlat, kStairs };

/// PD gain schedule. The flat-ground damping is deliberately low to soften
/// touchdowns; stair climbing trades that for tracking accuracy.
struct GainSchedule {
  Vec3 kp_swing = Vec3(30.0, 30.0, 30.0);
  Vec3 kd_flat = Vec3(0.5, 0.5, 0.5);
  Vec3 kd_stairs = Vec3(2.0, 1.0, 1.0);

  Vec3 kd(TerrainMode mode) const { return mode == TerrainMode::kStairs ? kd_stairs : kd_flat; }
};

/// Stance leg: feedforward torque tau = J^T (-R^T f_world), position targets
/// hold the measured state so the PD terms are inert between updates.
JointCommand stance_command(const LegKinematics& legs, int leg, const Vec3& q, const Vec3& qd,
                            const Vec3& f_world, const Mat3& R, const GainSchedule& gains,
                            TerrainMode mode, double torque_limit);

/// Swing leg: joint targets from IK of the world-frame swing trajectory;
/// velocities mapped through the leg Jacobian.
JointCommand swing_command(const LegKinematics& legs, int leg, const Vec3& q,
                           const SwingTrajectory& traj, double t, const BodyState& body,
                           const GainSchedule& gains, TerrainMode mode);

}  // namespace loco
