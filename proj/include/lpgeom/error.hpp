#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpg {

enum class ErrorKind {
    Parse,
    UnknownSymbol,
    DivisionByZero,
    ChartMismatch,
    InvalidArgument,
    Precondition,
    SymmetryViolation,
    Degenerate,
    Io,
    Format,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Syntax errors carry a byte offset into the source text (expressions) or a
// 1-based line number (documents); whichever does not apply is zero.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
        : Error(ErrorKind::Parse, format(message, position, line)),
          position_(position), line_(line) {}

    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& message, std::size_t position, std::size_t line) {
        if (line != 0) return "line " + std::to_string(line) + ": " + message;
        return "at offset " + std::to_string(position) + ": " + message;
    }

    std::size_t position_;
    std::size_t line_;
};

} // namespace lpg
