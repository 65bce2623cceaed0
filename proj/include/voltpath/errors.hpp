#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace voltpath {

/// Base class for all library errors. Input/validation problems derive from
/// this directly; numerical failures derive from NumericalError so the CLI
/// can map them to a distinct exit code.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid graph:";
        for (const auto& s : v)
            out += " [" + s + "]";
        return out;
    }
    std::vector<std::string> violations_;
};

class UnreachableNodeError : public Error {
  public:
    explicit UnreachableNodeError(std::vector<std::string> nodes)
        : Error(message(nodes)), nodes_(std::move(nodes)) {}
    const std::vector<std::string>& nodes() const { return nodes_; }

  private:
    static std::string message(const std::vector<std::string>& nodes) {
        std::string out = "nodes unreachable from start:";
        for (const auto& n : nodes)
            out += " " + n;
        return out;
    }
    std::vector<std::string> nodes_;
};

class OutOfIntervalError : public Error {
  public:
    using Error::Error;
};

class UnknownEdgeIdError : public Error {
  public:
    using Error::Error;
};

class NoPathError : public Error {
  public:
    using Error::Error;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

class SingularSystemError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class ZeroCurrentError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

} // namespace voltpath
