#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>

#include "tactile/errors.hpp"

namespace tactile {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// Coordinate frame a wrench is expressed in. A closed enum so that mixing
// frames is a type-checked failure instead of a silent unit bug.
enum class Frame { Base, EndEffector };

inline const char* frame_name(Frame f) {
    return f == Frame::Base ? "base" : "ee";
}

// Six-axis force/torque pair tagged with its frame.
struct Wrench {
    Eigen::Vector3d force = Eigen::Vector3d::Zero();    // N
    Eigen::Vector3d torque = Eigen::Vector3d::Zero();   // N·m
    Frame frame = Frame::Base;

    static Wrench zero(Frame f) { return Wrench{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(), f}; }

    static Wrench from_vector(const Vector6d& v, Frame f) {
        return Wrench{v.head<3>(), v.tail<3>(), f};
    }

    Vector6d to_vector() const {
        Vector6d v;
        v << force, torque;
        return v;
    }

    bool finite() const { return force.allFinite() && torque.allFinite(); }
};

// CSV column names for a wrench, e.g. "ee_fx,ee_fy,...,ee_tz".
inline std::string wrench_csv_header(const std::string& prefix) {
    return prefix + "_fx," + prefix + "_fy," + prefix + "_fz," +
           prefix + "_tx," + prefix + "_ty," + prefix + "_tz";
}

inline bool is_orthonormal(const Eigen::Matrix3d& R, double tol) {
    const Eigen::Matrix3d err = R.transpose() * R - Eigen::Matrix3d::Identity();
    return err.cwiseAbs().maxCoeff() <= tol && R.determinant() > 0.0;
}

// Rotate a base-frame wrench into the end-effector frame: both the force
// and the torque are multiplied by R_b^e (block-diagonal rotation), so the
// magnitudes are unchanged.
inline Wrench transform_wrench(const Eigen::Matrix3d& R_b_e, const Wrench& w) {
    if (w.frame != Frame::Base) {
        throw FrameError("transform_wrench: input wrench must be in the base frame");
    }
    if (!is_orthonormal(R_b_e, 1e-8)) {
        throw InvalidRotationError("transform_wrench: rotation matrix is not orthonormal");
    }
    return Wrench{R_b_e * w.force, R_b_e * w.torque, Frame::EndEffector};
}

// Per-axis dead-band used to suppress sensor vibration. A component whose
// magnitude is below the threshold reads as zero; at or above the threshold
// it passes through unchanged.
struct ThresholdFilter {
    Vector6d threshold = Vector6d::Zero();  // N for axes 0-2, N·m for 3-5

    ThresholdFilter() = default;

    explicit ThresholdFilter(const Vector6d& t) : threshold(t) {
        if (!threshold.allFinite() || (threshold.array() < 0.0).any()) {
            throw std::invalid_argument("ThresholdFilter: thresholds must be finite and non-negative");
        }
    }

    ThresholdFilter(double force_threshold, double torque_threshold)
        : ThresholdFilter((Vector6d() << force_threshold, force_threshold, force_threshold,
                           torque_threshold, torque_threshold, torque_threshold)
                              .finished()) {}
};

inline Wrench apply_threshold(const ThresholdFilter& filter, const Wrench& w) {
    Vector6d v = w.to_vector();
    for (int i = 0; i < 6; ++i) {
        if (std::abs(v[i]) < filter.threshold[i]) v[i] = 0.0;
    }
    return Wrench::from_vector(v, w.frame);
}

// Contact force opposes motion: on every axis where both the force and the
// velocity are nonzero, their signs must be opposite. Axes with a zero on
// either side are vacuously fine.
inline bool contact_sign_check(const Eigen::Vector3d& f, const Eigen::Vector3d& v) {
    for (int i = 0; i < 3; ++i) {
        if (f[i] != 0.0 && v[i] != 0.0 && std::signbit(f[i]) == std::signbit(v[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace tactile
