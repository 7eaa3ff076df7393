#pragma once

#include <stdexcept>
#include <string>

namespace uag {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed DSL input. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

/// A computation would exceed a configured resource bound. Never truncated silently.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A named signature/algebra/system could not be resolved.
class NameError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace uag
