#pragma once

#include <stdexcept>
#include <string>

namespace todaslice {

// Unsupported type/rank, bad flags, malformed parameters.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad command line: unknown suite id, unknown subcommand.
class UsageError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

// An argument violates an operation's precondition (not nilpotent, not in
// the Borel, outside V_Toda, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical step failed in a way that should be impossible for valid input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace todaslice
