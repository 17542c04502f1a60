#pragma once

#include "loco/so3.hpp"
#include "loco/types.hpp"

namespace loco {

/// Extra force/torque acting on the body (disturbances), world frame,
/// torque taken about the center of mass.
struct ExternalWrench {
  Vec3 force = Vec3::Zero();
  Vec3 torque = Vec3::Zero();
};

/// One step of the discrete single-rigid-body dynamics.
///
/// Semi-implicit Euler on the linear part (velocity first, position with the
/// updated velocity), explicit Euler on the body-frame angular velocity, and
/// the 3rd-order Taylor polynomial for the rotation. The returned rotation is
/// the raw polynomial product; the simulator re-orthonormalizes separately.
BodyState srb_dynamics_discrete(const BodyState& x, const FootForces& f,
                                const std::array<Vec3, 4>& feet, const RobotParams& params,
                                double dt, const ExternalWrench& ext = {});

/// Net world torque about the COM from foot forces and an external wrench.
Vec3 net_world_torque(const BodyState& x, const FootForces& f, const std::array<Vec3, 4>& feet,
                      const ExternalWrench& ext = {});

}  // namespace loco
