#pragma once

#include <stdexcept>
#include <string>

namespace tdcount {

// Input could not be parsed. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// A configured budget (rows, variables) would be exceeded; the caller may
// retry along another path.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An external solver failed and no fallback was possible.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tdcount
