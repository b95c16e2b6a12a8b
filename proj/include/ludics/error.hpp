#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ludics {

enum class ErrorCode {
    // chronicles and designs
    Alternation,
    Justification,
    Linearity,
    DaimonPlacement,
    BaseMismatch,
    EmptyChronicle,
    InvalidBase,
    NotPrefixClosed,
    IncoherentPair,
    NegativeLeaf,
    TotalityViolation,
    OverlappingBases,
    MultiplePositiveBases,
    // paths
    UnjustifiedAction,
    NegativeJump,
    Totality,
    IncoherentInput,
    NegativeMaximalPath,
    ConditionViolated,
    NegativeEndedInput,
    // interaction
    NotClosed,
    Cyclic,
    Disconnected,
    // visitability and incarnation
    MixedBases,
    NotAPathOfE,
    DesignNotInE,
    BoundExceeded,
    CliqueCapExceeded,
    // text input
    Syntax,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. `index` is the offending position
/// for sequence errors, or the failed bullet for ConditionViolated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::optional<std::size_t> index = std::nullopt);

    ErrorCode code() const { return code_; }
    std::optional<std::size_t> index() const { return index_; }
    /// The message without the code prefix.
    const std::string& detail() const { return detail_; }

    /// Resource caps map to a distinct CLI exit status.
    bool is_resource_cap() const
    {
        return code_ == ErrorCode::BoundExceeded || code_ == ErrorCode::CliqueCapExceeded;
    }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
    std::string detail_;
};

} // namespace ludics
