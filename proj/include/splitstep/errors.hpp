#ifndef SPLITSTEP_ERRORS_HPP
#define SPLITSTEP_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace splitstep {

// Failure taxonomy shared by the propagators, schemes and the study driver.
// The CLI maps Config to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
    Config,          // invalid grid/scheme/study configuration
    NonFinite,       // NaN/Inf detected in state data
    SymbolOverflow,  // Fourier multiplier not representable
    Divergence,      // fixed-point iteration stopped contracting
    Unstable,        // backward parabolic substep beyond the amplification guard
    FlowFailure,     // inner integrator step-size underflow
    Io,              // file read/write problem
};

const char* to_string(ErrorKind kind);

class SplitError : public std::runtime_error {
  public:
    SplitError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind(kind) {}

    ErrorKind kind;
    // Set by integrate() when a step fails mid-trajectory.
    std::optional<long> step_index;
};

}  // namespace splitstep

#endif
