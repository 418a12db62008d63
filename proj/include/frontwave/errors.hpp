#pragma once

#include <stdexcept>
#include <string>

namespace frontwave {

struct FrontwaveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedSurface : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct AmbientMismatch : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct BadWord : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct TrivialElement : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct ParityViolation : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct WrongParity : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct BadFrontCode : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct UnknownDoublePoint : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct InvalidMove : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct InconsistentSite : InvalidMove {
    using InvalidMove::InvalidMove;
};

struct UnsupportedLoop : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct KeySpaceMismatch : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct ClassDataMismatch : FrontwaveError {
    using FrontwaveError::FrontwaveError;
};

struct ParseError : FrontwaveError {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : FrontwaveError(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

}  // namespace frontwave
