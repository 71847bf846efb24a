#pragma once

#include <stdexcept>
#include <string>

namespace relgb {

// Malformed or inconsistent input (bad text, unknown variable, rank mismatch).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : InputError(format(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
    }
    std::size_t line_;
    std::size_t column_;
};

// A documented precondition of an algorithm does not hold for the given data
// (e.g. a matrix that is not in Groebner form, a non-homogeneous input).
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relgb
