#pragma once

#include <stdexcept>
#include <string>

namespace wlg {

enum class ErrorCode {
    Overflow,
    InvalidMatrix,
    WrongLabel,
    NotATree,
    NotSimple,
    NotNeat,
    NotNeatSimple,
    NotRealizable,
    SameVertex,
    MissingComponent,
    InvalidWitness,
    UnsupportedCount,
    ParseError,
    SchemaError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace wlg
