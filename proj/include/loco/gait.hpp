#pragma once

#include "loco/types.hpp"

#include <vector>

namespace loco {

enum class GaitType { kStand, kTrot };

/// Gait timing. Trot pairs the diagonal legs: {FL, RR} at phase offset 0 and
/// {FR, RL} half a cycle later. Phase is the global gait phase in [0, 1).
struct GaitConfig {
  GaitType gait = GaitType::kTrot;
  double swing_time = 0.25;
  double stance_time = 0.25;
  std::array<double, 4> phase_offsets = {0.0, 0.5, 0.5, 0.0};
  double downswing_fraction = 0.65;

  double cycle_time() const { return swing_time + stance_time; }
  double stance_fraction() const { return stance_time / cycle_time(); }

  void validate() const {
    if (!(swing_time > 0.0)) throw std::invalid_argument("GaitConfig: swing_time must be > 0");
    if (!(stance_time > 0.0)) throw std::invalid_argument("GaitConfig: stance_time must be > 0");
    if (!(downswing_fraction > 0.0 && downswing_fraction < 1.0))
      throw std::invalid_argument("GaitConfig: downswing_fraction must be in (0,1)");
    for (double o : phase_offsets)
      if (o < 0.0 || o >= 1.0)
        throw std::invalid_argument("GaitConfig: phase offsets must be in [0,1)");
  }
};

inline double wrap_phase(double phase) {
  double p = std::fmod(phase, 1.0);
  return p < 0.0 ? p + 1.0 : p;
}

/// Stance/swing flag of one leg at a given global phase (stance first).
bool stance_at_phase(const GaitConfig& config, double phase, int leg);

/// Per-foot stance flags over the prediction horizon.
struct ContactSchedule {
  std::vector<std::array<bool, 4>> c;  ///< c[k][leg], true = stance
  double dt = 0.025;
  double phase = 0.0;

  int horizon() const { return static_cast<int>(c.size()); }
  int stance_count(int k) const {
    return static_cast<int>(c[k][0]) + c[k][1] + c[k][2] + c[k][3];
  }
  bool operator==(const ContactSchedule& other) const = default;
};

ContactSchedule build_contact_schedule(const GaitConfig& config, double phase, int horizon,
                                       double dt);

/// Commanded base motion: planar velocity in the body (heading) frame, yaw
/// rate, and target body height.
struct Command {
  double vx = 0.0;
  double vy = 0.0;
  double yaw_rate = 0.0;
  double height = 0.30;
};

/// Reference states x_1..x_N plus x_0, and reference forces f_0..f_{N-1}
/// (vertical, weight split across the scheduled stance feet).
struct RefTrajectory {
  std::vector<BodyState> states;     ///< size N + 1
  std::vector<FootForces> forces;    ///< size N
};

RefTrajectory reference_trajectory(const BodyState& x0, const Command& cmd,
                                   const ContactSchedule& schedule, const RobotParams& params);

/// Raibert heuristic plus capture-point correction. `v_cmd_world` is the
/// commanded planar velocity rotated into the world frame. The correction
/// away from the hip projection is clamped to `clamp_radius`. Returned z is 0
/// (flat ground); terrain-aware callers overwrite it from the height map.
Vec3 plan_foothold(const BodyState& x, const Vec3& v_cmd_world, int leg,
                   const RobotParams& params, double stance_time, double clamp_radius = 0.15);

}  // namespace loco
