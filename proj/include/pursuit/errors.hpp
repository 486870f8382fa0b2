#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

// Base of everything this library throws on purpose.
class PursuitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Precondition on an argument did not hold (wrong graph kind, bad parameter range).
class InvalidArgument : public PursuitError {
public:
  using PursuitError::PursuitError;
};

class ParseError : public PursuitError {
public:
  ParseError(int line, const std::string& what)
      : PursuitError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// The exact solver refuses to exceed its configured state budget.
class ResourceError : public PursuitError {
public:
  using PursuitError::PursuitError;
};

// A decision that violates the game rules. The message names the rule.
class IllegalMove : public PursuitError {
public:
  using PursuitError::PursuitError;
};

// A cop controller detected that one of its stage bounds failed during play.
class StageInvariantError : public PursuitError {
public:
  using PursuitError::PursuitError;
};

class InfeasibleParams : public PursuitError {
public:
  using PursuitError::PursuitError;
};

} // namespace pursuit
