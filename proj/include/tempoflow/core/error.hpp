#pragma once

#include <stdexcept>
#include <string>

namespace tempoflow {

/// Malformed or semantically invalid input data (CLI exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a DAG was given a graph with a directed cycle.
class CycleDetected : public DataError {
 public:
  using DataError::DataError;
};

/// A violated internal invariant, i.e. a bug rather than bad input (CLI exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tempoflow
