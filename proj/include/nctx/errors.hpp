#pragma once

#include <stdexcept>
#include <string>

namespace nctx {

// All recoverable failures carry a stable kind tag so callers (and the CLI)
// can map them without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Input validation failures (exit code 1 territory).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Internal solver failures (exit code 2 territory).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace nctx
