#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotor {

enum class ErrorCode {
    // graph construction / validation
    NotStronglyConnected,
    EmptyTargets,
    DanglingVertex,
    SourceIsTarget,
    UnknownVertex,
    InvalidMechanism,
    // dynamics
    TargetVertex,
    NoParticle,
    NotUnstable,
    NotACycle,
    StepBudgetExceeded,
    PushBudgetExceeded,
    OrbitBudgetExceeded,
    EnumerationTooLarge,
    // verifier preconditions
    PreconditionNotPalindromic,
    PreconditionNotRepetitive,
    // file format
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, int line = -1, int column = -1)
        : std::runtime_error(message), code_(code), line_(line), column_(column) {}

    ErrorCode code() const { return code_; }
    // Source position for ParseError/ValidationError diagnostics; -1 when not applicable.
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorCode code_;
    int line_;
    int column_;
};

}  // namespace rotor
