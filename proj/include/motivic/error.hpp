#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motivic {

enum class ErrorCode {
    NotPrime,
    DegreeOutOfRange,
    DivisionByZero,
    ContextMismatch,
    BudgetExceeded,
    SyntaxError,
    ValidationError,
    InvalidComplement,
    NonIntegralProfile,
    NonIntegralSeries,
    PrecisionMismatch,
    BaseFieldMismatch,
    InsufficientData,
    NoRationalForm,
    NonIntegralCoefficients,
    ZeroInput,
    NotOddPrime,
    UnsupportedSpace,
    UnsupportedCycleLength,
    UnsupportedScenario,
    Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// The single exception type thrown by the library. `position` is set for
/// parse errors and points into the original input (byte offset).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), code_(code), position_(position) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

}  // namespace motivic
