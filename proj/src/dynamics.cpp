#include "loco/dynamics.hpp"

namespace loco {

Vec3 net_world_torque(const BodyState& x, const FootForces& f, const std::array<Vec3, 4>& feet,
                      const ExternalWrench& ext) {
  Vec3 tau = ext.torque;
  for (int i = 0; i < kNumLegs; ++i) tau += (feet[i] - x.p).cross(f.f[i]);
  return tau;
}

BodyState srb_dynamics_discrete(const BodyState& x, const FootForces& f,
                                const std::array<Vec3, 4>& feet, const RobotParams& params,
                                double dt, const ExternalWrench& ext) {
  const Vec3 gravity(0.0, 0.0, -kGravity);
  BodyState out;

  const Vec3 accel = (f.total() + ext.force) / params.mass + gravity;
  out.v = x.v + dt * accel;
  out.p = x.p + dt * out.v;

  const Vec3 tau_body = x.R.transpose() * net_world_torque(x, f, feet, ext);
  const Vec3 wdot = params.inertia.inverse() * (tau_body - x.w.cross(params.inertia * x.w));
  out.w = x.w + dt * wdot;

  out.R = integrate_rotation_taylor3(x.R, x.w, dt);
  return out;
}

}  // namespace loco
