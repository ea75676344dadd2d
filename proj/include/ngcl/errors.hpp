#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ngcl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

class UnknownVariableError : public Error {
public:
    explicit UnknownVariableError(const std::string& name)
        : Error("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// |Sigma| (or a derived quantity) exceeds a configured cap.
class StateCapError : public Error {
public:
    using Error::Error;
};

// Configuration-graph or search budget exhausted.
class ResourceError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Two engines that must agree did not. Always a bug.
class EngineMismatch : public Error {
public:
    using Error::Error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace ngcl
