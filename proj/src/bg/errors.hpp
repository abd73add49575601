#pragma once

#include <stdexcept>
#include <string>

namespace bg {

// Error taxonomy; the C API maps each type to a status code.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
  double achieved;
  ConvergenceError(const std::string& what, double achieved_residual)
      : std::runtime_error(what), achieved(achieved_residual) {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiagnosticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// act/observe called out of order
struct ProtocolError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bg
