#pragma once

#include <stdexcept>
#include <string>

namespace tgvlab {

/// Malformed configuration input (bad key, bad value, missing file).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable, corrupt or mismatched checkpoint file.
class CheckpointError : public std::runtime_error {
public:
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite state detected during time stepping.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, long long step) : std::runtime_error(what), step_index(step) {}
    long long step_index;
};

/// Analysis precondition failure (empty fit window, non-positive ratios, ...).
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tgvlab
