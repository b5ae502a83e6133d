#include "rotor/error.hpp"

namespace rotor {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorCode::EmptyTargets: return "EmptyTargets";
        case ErrorCode::DanglingVertex: return "DanglingVertex";
        case ErrorCode::SourceIsTarget: return "SourceIsTarget";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::InvalidMechanism: return "InvalidMechanism";
        case ErrorCode::TargetVertex: return "TargetVertex";
        case ErrorCode::NoParticle: return "NoParticle";
        case ErrorCode::NotUnstable: return "NotUnstable";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorCode::PushBudgetExceeded: return "PushBudgetExceeded";
        case ErrorCode::OrbitBudgetExceeded: return "OrbitBudgetExceeded";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::PreconditionNotPalindromic: return "PreconditionNotPalindromic";
        case ErrorCode::PreconditionNotRepetitive: return "PreconditionNotRepetitive";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

}  // namespace rotor
