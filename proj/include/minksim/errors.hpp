#pragma once

#include <stdexcept>
#include <string>

namespace minksim {

/// Configuration / validation failure (bad arguments, bad config file).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A particle tried to leave the lattice.
class OutOfSpaceError : public std::runtime_error {
public:
    explicit OutOfSpaceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The lab timeline ended before the requested work was done.
class TimelineExhaustedError : public std::runtime_error {
public:
    explicit TimelineExhaustedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Reason an interaction was refused.
enum class ImpactRefusal {
    MotionIncomplete,  // jump still in progress
    TimeStopped,       // momentum register at or beyond the resolution
};

/// A carrier was offered to a particle that cannot interact.
class InteractionForbiddenError : public std::runtime_error {
public:
    InteractionForbiddenError(ImpactRefusal why, const std::string& msg)
        : std::runtime_error(msg), reason(why) {}
    ImpactRefusal reason;
};

}  // namespace minksim
