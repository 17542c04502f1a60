#include "loco/swing.hpp"

#include <algorithm>
#include <cmath>

namespace loco {

namespace {

struct Hermite {
  Vec3 p0, p1, v0, v1;
  double h;  // segment length in time

  Vec3 pos(double s) const {
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * h * v0 + (-2 * s3 + 3 * s2) * p1 +
           (s3 - s2) * h * v1;
  }
  Vec3 vel(double s) const {
    const double s2 = s * s;
    return ((6 * s2 - 6 * s) * p0 + (3 * s2 - 4 * s + 1) * h * v0 + (-6 * s2 + 6 * s) * p1 +
            (3 * s2 - 2 * s) * h * v1) /
           h;
  }
};

struct Segments {
  Hermite up, down;
  double t1;
};

Segments build(const SwingTrajectory& traj) {
  const double t1 = traj.apex_time();
  const double t_down = traj.duration - t1;
  Vec3 apex((traj.start.x() + traj.target.x()) / 2.0, (traj.start.y() + traj.target.y()) / 2.0,
            traj.apex_z());
  Vec3 v_apex = (traj.target - traj.start) / traj.duration;
  v_apex.z() = 0.0;
  Vec3 v_end = Vec3::Zero();
  v_end.z() = -(traj.apex_z() - traj.target.z()) * t1 / (t_down * t_down);
  return {Hermite{traj.start, apex, Vec3::Zero(), v_apex, t1},
          Hermite{apex, traj.target, v_apex, v_end, t_down}, t1};
}

}  // namespace

Vec3 swing_position(const SwingTrajectory& traj, double t) {
  t = std::clamp(t, 0.0, traj.duration);
  const Segments seg = build(traj);
  if (t <= seg.t1) return seg.up.pos(seg.t1 > 0.0 ? t / seg.t1 : 1.0);
  return seg.down.pos((t - seg.t1) / seg.down.h);
}

Vec3 swing_velocity(const SwingTrajectory& traj, double t) {
  t = std::clamp(t, 0.0, traj.duration);
  const Segments seg = build(traj);
  if (t <= seg.t1) return seg.up.vel(seg.t1 > 0.0 ? t / seg.t1 : 1.0);
  return seg.down.vel((t - seg.t1) / seg.down.h);
}

}  // namespace loco
