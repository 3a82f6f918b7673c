#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rab {

/// No blocklength (or no (n, G) pair) admits the task constraints.
struct InfeasibleSpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The SNR root could not be bracketed within the allowed search range.
struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The retransmission backlog diverged: the arrival rate is above the
/// critical throughput the access policy can carry.
struct UnstableSimulationError : std::runtime_error {
    UnstableSimulationError(const std::string& msg, std::uint64_t slot_, std::uint64_t backlog_)
        : std::runtime_error(msg), slot(slot_), backlog(backlog_) {}

    std::uint64_t slot;
    std::uint64_t backlog;
};

}  // namespace rab
