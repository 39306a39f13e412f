// errors.hpp
// Typed domain errors shared by all cfgsg modules.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfgsg {

enum class ErrorCode {
    EmptyGenerators,
    NonCoprimeGenerators,
    InvalidPattern,
    MalformedStructure,
    NotAConfiguration,
    NonIntegralParameter,
    NotAPrimePower,
    ParameterTooLarge,
    ModulusTooSmall,
    RepairFailed,
    BudgetExceeded,
    UnknownOrder,
    InvalidArgument,
};

constexpr std::string_view code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmptyGenerators:      return "EmptyGenerators";
        case ErrorCode::NonCoprimeGenerators: return "NonCoprimeGenerators";
        case ErrorCode::InvalidPattern:       return "InvalidPattern";
        case ErrorCode::MalformedStructure:   return "MalformedStructure";
        case ErrorCode::NotAConfiguration:    return "NotAConfiguration";
        case ErrorCode::NonIntegralParameter: return "NonIntegralParameter";
        case ErrorCode::NotAPrimePower:       return "NotAPrimePower";
        case ErrorCode::ParameterTooLarge:    return "ParameterTooLarge";
        case ErrorCode::ModulusTooSmall:      return "ModulusTooSmall";
        case ErrorCode::RepairFailed:         return "RepairFailed";
        case ErrorCode::BudgetExceeded:       return "BudgetExceeded";
        case ErrorCode::UnknownOrder:         return "UnknownOrder";
        case ErrorCode::InvalidArgument:      return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cfgsg
