#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "crdfa/state_set.hpp"

namespace crdfa {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad letter, wrong universe,
/// empty set where a non-empty one is required, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A stand-alone search for a properly extending word reached a superset
/// that has none, i.e. a witness candidate strictly larger than the input.
class AssumptionViolated : public Error {
 public:
  explicit AssumptionViolated(StateSet candidate);
  const StateSet& candidate() const noexcept { return candidate_; }

 private:
  StateSet candidate_;
};

/// Raised by the word synthesis routines, which require a completely
/// reachable automaton. `blocking()` is the set whose search got stuck.
class NotCompletelyReachable : public Error {
 public:
  explicit NotCompletelyReachable(StateSet blocking);
  const StateSet& blocking() const noexcept { return blocking_; }

 private:
  StateSet blocking_;
};

class NotSynchronizing : public Error {
 public:
  using Error::Error;
};

/// The exhaustive oracle was asked for more states than it can enumerate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal invariant failed. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace crdfa
