#include "crdfa/error.hpp"

namespace crdfa {

AssumptionViolated::AssumptionViolated(StateSet candidate)
    : Error("no properly extending word for the strictly larger set " + to_string(candidate)),
      candidate_(std::move(candidate)) {}

NotCompletelyReachable::NotCompletelyReachable(StateSet blocking)
    : Error("automaton is not completely reachable: " + to_string(blocking) +
            " has no properly extending word"),
      blocking_(std::move(blocking)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace crdfa
