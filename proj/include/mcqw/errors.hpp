#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcqw {

enum class ErrorKind {
    InvalidInput,
    ZeroOutDegree,
    NonUniqueStationary,
    NotSymmetric,
    NoConvergence,
    DegenerateNormalization,
    StateOutsideInvariantSubspace,
    PreconditionViolation,
    LightConeOverflow,
    SingularK,
    QuadratureFailure,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every domain failure in the library surfaces as an Error carrying its kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    // line == 0 means the problem is not tied to a particular line.
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::Parse,
                line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mcqw
