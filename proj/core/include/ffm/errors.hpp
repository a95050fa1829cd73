#pragma once

#include <stdexcept>
#include <string>

namespace ffm {

// Chart point at infinity: the group antipode g = -1 has no finite momentum.
struct AntipodeError : std::runtime_error {
    explicit AntipodeError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularFrameError : std::runtime_error {
    explicit SingularFrameError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGridError : std::runtime_error {
    explicit EmptyGridError(const std::string& what) : std::runtime_error(what) {}
};

// A chart momentum left the truncation region; the coupling carrying it is
// dropped and accounted for, never wrapped.
struct OutOfBandError : std::runtime_error {
    explicit OutOfBandError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SnapshotError : std::runtime_error {
    explicit SnapshotError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the integrator produces a non-finite amplitude or energy.
struct NonFiniteError : std::runtime_error {
    explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ffm
