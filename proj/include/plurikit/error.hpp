#pragma once

#include <stdexcept>
#include <string>

namespace plurikit {

// Stable machine-readable error codes, mirrored verbatim in CLI error JSON.
enum class ErrorCode {
    PoleAtKappa,
    PoleAtS,
    SingularGram,
    SingularSystem,
    AmbientMismatch,
    ZeroPochhammer,
    NonHomogeneous,
    NonTVariable,
    BadInput,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::PoleAtKappa: return "PoleAtKappa";
        case ErrorCode::PoleAtS: return "PoleAtS";
        case ErrorCode::SingularGram: return "SingularGram";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::ZeroPochhammer: return "ZeroPochhammer";
        case ErrorCode::NonHomogeneous: return "NonHomogeneous";
        case ErrorCode::NonTVariable: return "NonTVariable";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw DomainError(code, what);
}

}  // namespace plurikit
