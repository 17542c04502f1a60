#pragma once

#include "loco/types.hpp"

namespace loco {

/// Swing-foot trajectory: two cubic Hermite segments joined at an apex
/// waypoint placed at (1 - downswing_fraction) of the duration, so most of
/// the swing time is spent on the descent. Touchdown approach speed is the
/// mean downswing rate scaled by t_up / t_down, which makes longer downswings
/// land disproportionately softer.
struct SwingTrajectory {
  Vec3 start = Vec3::Zero();
  Vec3 target = Vec3::Zero();
  double apex_height = 0.08;
  double duration = 0.25;
  double downswing_fraction = 0.65;

  double apex_time() const { return (1.0 - downswing_fraction) * duration; }
  double apex_z() const { return std::max(start.z(), target.z()) + apex_height; }
};

/// Position along the swing at time t in [0, duration]; t clamps to the ends.
Vec3 swing_position(const SwingTrajectory& traj, double t);

/// Velocity along the swing at time t; clamped t returns the end velocities.
Vec3 swing_velocity(const SwingTrajectory& traj, double t);

}  // namespace loco
