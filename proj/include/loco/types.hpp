#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <array>
#include <cstdint>
#include <stdexcept>

namespace loco {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using Vec12 = Eigen::Matrix<double, 12, 1>;

inline constexpr double kGravity = 9.81;
inline constexpr int kNumLegs = 4;

// Leg order used everywhere: front-left, front-right, rear-left, rear-right.
enum LegId : int {
  kFrontLeft = 0,
  kFrontRight = 1,
  kRearLeft = 2,
  kRearRight = 3,
};

inline bool is_front(int leg) { return leg == kFrontLeft || leg == kFrontRight; }
inline bool is_left(int leg) { return leg == kFrontLeft || leg == kRearLeft; }

/// Rigid-body pose and twist. Linear quantities are world frame, the angular
/// velocity is body frame (consistent with the right-multiplied rotation
/// update R <- R * exp([w] dt)).
struct BodyState {
  Vec3 p = Vec3::Zero();
  Mat3 R = Mat3::Identity();
  Vec3 v = Vec3::Zero();
  Vec3 w = Vec3::Zero();

  /// Max-norm of R^T R - I; used to decide when to re-orthonormalize.
  double orthonormality_drift() const {
    return (R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff();
  }
};

/// Mass, inertia and geometry of the single-rigid-body model plus the leg
/// layout. Defaults are a Go1-class 12 kg quadruped.
struct RobotParams {
  double mass = 12.0;
  Mat3 inertia = Vec3(0.1, 0.25, 0.3).asDiagonal();
  double mu = 0.5;
  double f_max = 150.0;
  std::array<Vec3, 4> hip_offsets = {
      Vec3(0.1881, 0.04675, 0.0),
      Vec3(0.1881, -0.04675, 0.0),
      Vec3(-0.1881, 0.04675, 0.0),
      Vec3(-0.1881, -0.04675, 0.0),
  };
  double link_abduction = 0.08;
  double link_thigh = 0.213;
  double link_shank = 0.213;
  double nominal_height = 0.30;
  double torque_limit = 23.7;

  double weight() const { return mass * kGravity; }

  void validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("RobotParams: mass must be positive");
    if (!inertia.isApprox(inertia.transpose(), 1e-12))
      throw std::invalid_argument("RobotParams: inertia must be symmetric");
    Eigen::SelfAdjointEigenSolver<Mat3> es(inertia);
    if (es.eigenvalues().minCoeff() <= 0.0)
      throw std::invalid_argument("RobotParams: inertia must be positive definite");
    if (!(mu > 0.0 && mu <= 2.0)) throw std::invalid_argument("RobotParams: mu out of (0, 2]");
    if (!(f_max > mass * kGravity / 2.0))
      throw std::invalid_argument("RobotParams: f_max must exceed half the body weight");
    if (!(link_thigh > 0.0 && link_shank > 0.0 && link_abduction > 0.0))
      throw std::invalid_argument("RobotParams: link lengths must be positive");
    if (!(nominal_height > 0.0 && nominal_height < link_thigh + link_shank))
      throw std::invalid_argument("RobotParams: nominal_height unreachable");
  }
};

/// Ground reaction forces per foot, world frame. Swing feet carry exact zeros.
struct FootForces {
  std::array<Vec3, 4> f = {Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};

  Vec3 total() const { return f[0] + f[1] + f[2] + f[3]; }

  Vec12 stacked() const {
    Vec12 out;
    for (int i = 0; i < kNumLegs; ++i) out.segment<3>(3 * i) = f[i];
    return out;
  }

  static FootForces from_stacked(const Vec12& v) {
    FootForces out;
    for (int i = 0; i < kNumLegs; ++i) out.f[i] = v.segment<3>(3 * i);
    return out;
  }
};

}  // namespace loco
