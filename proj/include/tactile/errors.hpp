#pragma once

#include <stdexcept>
#include <string>

namespace tactile {

// Jacobian too close to a rank drop for wrench recovery. Carries the
// manipulability measure sqrt(det(J*J^T)) at the offending configuration.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double measure)
        : std::runtime_error(what), measure_(measure) {}

    double measure() const { return measure_; }

private:
    double measure_;
};

// A wrench was supplied in the wrong coordinate frame.
class FrameError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A rotation matrix failed the orthonormality check.
class InvalidRotationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Training diverged (loss became non-finite).
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent config / model / data file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tactile
