#pragma once

#include <stdexcept>
#include <string>

namespace gel {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Search or enumeration stopped before it could decide anything.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A construction produced something its own verifier rejects.
struct PostconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gel
