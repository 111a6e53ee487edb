#include "motivic/error.hpp"

namespace motivic {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::InvalidComplement: return "InvalidComplement";
        case ErrorCode::NonIntegralProfile: return "NonIntegralProfile";
        case ErrorCode::NonIntegralSeries: return "NonIntegralSeries";
        case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
        case ErrorCode::BaseFieldMismatch: return "BaseFieldMismatch";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::NoRationalForm: return "NoRationalForm";
        case ErrorCode::NonIntegralCoefficients: return "NonIntegralCoefficients";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::NotOddPrime: return "NotOddPrime";
        case ErrorCode::UnsupportedSpace: return "UnsupportedSpace";
        case ErrorCode::UnsupportedCycleLength: return "UnsupportedCycleLength";
        case ErrorCode::UnsupportedScenario: return "UnsupportedScenario";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace motivic
