#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "tactile/errors.hpp"
#include "tactile/wrench.hpp"

namespace tactile {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

// One row of the serial-chain parameter table (classic convention):
// transform i-1 -> i is RotZ(theta + q_i) * TransZ(d) * TransX(a) * RotX(alpha).
struct DhRow {
    double a = 0.0;      // link length, m
    double alpha = 0.0;  // link twist, rad
    double d = 0.0;      // link offset, m
    double theta = 0.0;  // joint angle offset, rad
};

// Six-revolute-joint serial arm.
struct ArmModel {
    std::array<DhRow, 6> rows;

    explicit ArmModel(const std::array<DhRow, 6>& r) : rows(r) {
        for (const DhRow& row : rows) {
            if (!std::isfinite(row.a) || !std::isfinite(row.alpha) ||
                !std::isfinite(row.d) || !std::isfinite(row.theta)) {
                throw std::invalid_argument("ArmModel: link parameters must be finite");
            }
            if (row.a < 0.0 || row.d < 0.0) {
                throw std::invalid_argument("ArmModel: link lengths must be non-negative");
            }
        }
    }

    // Default geometry: alternating +-pi/2 twists, links in the 0.15-0.30 m
    // range. Any non-singular 6-DOF chain exercises the torque/wrench maps
    // the same way.
    static ArmModel default_arm() {
        return ArmModel({{
            {0.20, +M_PI / 2, 0.30, 0.0},
            {0.25, -M_PI / 2, 0.00, 0.0},
            {0.20, +M_PI / 2, 0.00, 0.0},
            {0.15, -M_PI / 2, 0.25, 0.0},
            {0.15, +M_PI / 2, 0.00, 0.0},
            {0.15, -M_PI / 2, 0.20, 0.0},
        }});
    }
};

inline double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

// Joint angles and velocities. Angles are kept normalized to (-pi, pi].
struct JointState {
    Vector6d q = Vector6d::Zero();
    Vector6d qdot = Vector6d::Zero();

    JointState() = default;

    JointState(const Vector6d& q_in, const Vector6d& qdot_in) : q(q_in), qdot(qdot_in) {
        if (!q.allFinite() || !qdot.allFinite()) {
            throw std::invalid_argument("JointState: entries must be finite");
        }
        for (int i = 0; i < 6; ++i) q[i] = normalize_angle(q[i]);
    }
};

// End-effector pose: rotation is R_b^e (maps base-frame coordinates into the
// end-effector frame), position is the origin of the hand in the base frame.
struct Pose {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
};

namespace detail {

inline Eigen::Matrix4d dh_transform(const DhRow& row, double q) {
    const double ct = std::cos(row.theta + q);
    const double st = std::sin(row.theta + q);
    const double ca = std::cos(row.alpha);
    const double sa = std::sin(row.alpha);
    Eigen::Matrix4d T;
    T << ct, -st * ca, st * sa, row.a * ct,
         st, ct * ca, -ct * sa, row.a * st,
         0.0, sa, ca, row.d,
         0.0, 0.0, 0.0, 1.0;
    return T;
}

// Base-frame origins and z axes of every joint plus the end effector.
struct ChainFrames {
    std::array<Eigen::Vector3d, 7> origin;
    std::array<Eigen::Vector3d, 7> z_axis;
    Eigen::Matrix3d R_0_e;  // end-effector axes in base coordinates
};

inline ChainFrames chain_frames(const ArmModel& model, const Vector6d& q) {
    ChainFrames f;
    Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
    f.origin[0] = Eigen::Vector3d::Zero();
    f.z_axis[0] = Eigen::Vector3d::UnitZ();
    for (int i = 0; i < 6; ++i) {
        T = T * dh_transform(model.rows[static_cast<std::size_t>(i)], q[i]);
        f.origin[i + 1] = T.block<3, 1>(0, 3);
        f.z_axis[i + 1] = T.block<3, 1>(0, 2);
    }
    f.R_0_e = T.block<3, 3>(0, 0);
    return f;
}

}  // namespace detail

inline Pose forward_kinematics(const ArmModel& model, const Vector6d& q) {
    if (!q.allFinite()) {
        throw std::invalid_argument("forward_kinematics: joint angles must be finite");
    }
    const detail::ChainFrames f = detail::chain_frames(model, q);
    Pose pose;
    pose.rotation = f.R_0_e.transpose();  // R_b^e
    pose.position = f.origin[6];
    return pose;
}

// Geometric Jacobian: column i is (z_{i-1} x (p_e - p_{i-1}); z_{i-1}), all
// in base-frame coordinates.
inline Matrix6d geometric_jacobian(const ArmModel& model, const Vector6d& q) {
    if (!q.allFinite()) {
        throw std::invalid_argument("geometric_jacobian: joint angles must be finite");
    }
    const detail::ChainFrames f = detail::chain_frames(model, q);
    Matrix6d J;
    for (int i = 0; i < 6; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const Eigen::Vector3d lever = f.origin[6] - f.origin[k];
        J.block<3, 1>(0, i) = f.z_axis[k].cross(lever);
        J.block<3, 1>(3, i) = f.z_axis[k];
    }
    return J;
}

// Manipulability measure sqrt(det(J J^T)); zero at a singularity.
inline double singularity_measure(const Matrix6d& J) {
    const double det = (J * J.transpose()).determinant();
    return std::sqrt(std::max(det, 0.0));
}

// tau = J^T F with F stacked (force; torque) in the base frame.
inline Vector6d joint_torques_from_wrench(const Matrix6d& J, const Wrench& F) {
    if (F.frame != Frame::Base) {
        throw FrameError("joint_torques_from_wrench: wrench must be in the base frame");
    }
    return J.transpose() * F.to_vector();
}

// Smallest-to-largest singular value ratio below this is treated as singular.
inline constexpr double kSingularityRatio = 1e-8;

// Recover the base-frame wrench from interaction joint torques by solving
// (J J^T) F = J tau. The normal matrix is factorized, not inverted.
inline Wrench wrench_from_joint_torques(const Matrix6d& J, const Vector6d& tau_int) {
    const Eigen::JacobiSVD<Matrix6d> svd(J);
    const auto& sv = svd.singularValues();
    if (!(sv[0] > 0.0) || sv[5] < kSingularityRatio * sv[0]) {
        throw SingularityError("wrench_from_joint_torques: Jacobian is singular or near-singular",
                               singularity_measure(J));
    }
    const Matrix6d JJt = J * J.transpose();
    const Vector6d rhs = J * tau_int;
    const Vector6d F = JJt.ldlt().solve(rhs);
    return Wrench::from_vector(F, Frame::Base);
}

}  // namespace tactile
