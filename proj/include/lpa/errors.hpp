#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Base class for all errors raised by the library. Anything mathematical
// that is *supposed* to happen (a zero element, an empty decomposition
// block list) is a value, not an error; exceptions are reserved for
// violated preconditions and malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph files or algebra expressions. Carries a 1-based line
// number when one is known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace lpa
