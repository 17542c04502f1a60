#include "loco/gait.hpp"

#include "loco/so3.hpp"

#include <cmath>

namespace loco {

bool stance_at_phase(const GaitConfig& config, double phase, int leg) {
  if (config.gait == GaitType::kStand) return true;
  // Snap to a 1e-9 grid so rows landing exactly on a stance/swing boundary
  // classify the same way regardless of accumulated rounding.
  double local = wrap_phase(phase + config.phase_offsets[leg]);
  local = std::round(local * 1e9) / 1e9;
  if (local >= 1.0) local = 0.0;
  return local < config.stance_fraction() - 1e-12;
}

ContactSchedule build_contact_schedule(const GaitConfig& config, double phase, int horizon,
                                       double dt) {
  if (horizon < 1) throw std::invalid_argument("build_contact_schedule: horizon must be >= 1");
  config.validate();
  ContactSchedule out;
  out.dt = dt;
  out.phase = wrap_phase(phase);
  out.c.resize(horizon);
  const double dphase = dt / config.cycle_time();
  for (int k = 0; k < horizon; ++k) {
    const double pk = out.phase + k * dphase;
    for (int leg = 0; leg < kNumLegs; ++leg) out.c[k][leg] = stance_at_phase(config, pk, leg);
  }
  return out;
}

RefTrajectory reference_trajectory(const BodyState& x0, const Command& cmd,
                                   const ContactSchedule& schedule, const RobotParams& params) {
  const int N = schedule.horizon();
  RefTrajectory ref;
  ref.states.resize(N + 1);
  ref.forces.resize(N);

  const double yaw0 = rpy_from_rotation(x0.R).z();
  BodyState s;
  s.p = Vec3(x0.p.x(), x0.p.y(), cmd.height);
  s.R = rot_z(yaw0);
  s.w = Vec3(0.0, 0.0, cmd.yaw_rate);

  double yaw = yaw0;
  for (int k = 0; k <= N; ++k) {
    const Vec3 v_world = rot_z(yaw) * Vec3(cmd.vx, cmd.vy, 0.0);
    s.R = rot_z(yaw);
    s.v = v_world;
    ref.states[k] = s;
    s.p += schedule.dt * v_world;
    yaw += schedule.dt * cmd.yaw_rate;
  }

  for (int k = 0; k < N; ++k) {
    const int n_stance = schedule.stance_count(k);
    FootForces f;
    if (n_stance > 0) {
      const double fz = params.weight() / n_stance;
      for (int leg = 0; leg < kNumLegs; ++leg)
        if (schedule.c[k][leg]) f.f[leg] = Vec3(0.0, 0.0, fz);
    }
    ref.forces[k] = f;
  }
  return ref;
}

Vec3 plan_foothold(const BodyState& x, const Vec3& v_cmd_world, int leg,
                   const RobotParams& params, double stance_time, double clamp_radius) {
  const Vec3 hip_world = x.p + x.R * params.hip_offsets[leg];
  const double k_cp = std::sqrt(params.nominal_height / kGravity);

  Vec3 v = x.v;
  v.z() = 0.0;
  Vec3 v_cmd = v_cmd_world;
  v_cmd.z() = 0.0;

  Vec3 correction = 0.5 * stance_time * v_cmd + k_cp * (v - v_cmd);
  correction.z() = 0.0;
  const double norm = correction.norm();
  if (norm > clamp_radius) correction *= clamp_radius / norm;

  return Vec3(hip_world.x() + correction.x(), hip_world.y() + correction.y(), 0.0);
}

}  // namespace loco
