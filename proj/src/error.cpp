#include "ludics/error.hpp"

#include <utility>

namespace ludics {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Alternation: return "Alternation";
    case ErrorCode::Justification: return "Justification";
    case ErrorCode::Linearity: return "Linearity";
    case ErrorCode::DaimonPlacement: return "DaimonPlacement";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::EmptyChronicle: return "EmptyChronicle";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::NotPrefixClosed: return "NotPrefixClosed";
    case ErrorCode::IncoherentPair: return "IncoherentPair";
    case ErrorCode::NegativeLeaf: return "NegativeLeaf";
    case ErrorCode::TotalityViolation: return "TotalityViolation";
    case ErrorCode::OverlappingBases: return "OverlappingBases";
    case ErrorCode::MultiplePositiveBases: return "MultiplePositiveBases";
    case ErrorCode::UnjustifiedAction: return "UnjustifiedAction";
    case ErrorCode::NegativeJump: return "NegativeJump";
    case ErrorCode::Totality: return "Totality";
    case ErrorCode::IncoherentInput: return "IncoherentInput";
    case ErrorCode::NegativeMaximalPath: return "NegativeMaximalPath";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::NegativeEndedInput: return "NegativeEndedInput";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::Cyclic: return "Cyclic";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MixedBases: return "MixedBases";
    case ErrorCode::NotAPathOfE: return "NotAPathOfE";
    case ErrorCode::DesignNotInE: return "DesignNotInE";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::CliqueCapExceeded: return "CliqueCapExceeded";
    case ErrorCode::Syntax: return "Syntax";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index),
      detail_(std::move(message))
{
}

} // namespace ludics
