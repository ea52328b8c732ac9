// Shared exception types for the stable-matching suite.
#pragma once

#include <stdexcept>
#include <string>

namespace smti {

// A structurally invalid value (instance, matching, program, ...). The message
// says which invariant failed and for whom.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable resource bound (person count, atom count, interpretation
// size) was exceeded. Callers that want to retry must raise the bound
// explicitly; nothing is silently truncated.
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text could not be parsed. Carries a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace smti
