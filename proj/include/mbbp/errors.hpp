// SPDX-License-Identifier: Apache-2.0
// Exception types shared by all mbbp components.
#pragma once

#include <stdexcept>
#include <string>

namespace mbbp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error {
  using Error::Error;
};

struct DuplicateEdge : Error {
  using Error::Error;
};

// Enumeration would exceed the configured subset budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Seed vertex handed to a set builder is not a member of the base set.
struct InvalidSeed : Error {
  using Error::Error;
};

struct UnknownAlgorithm : Error {
  using Error::Error;
};

// Branch-vertex selection was asked to pick from an empty set.
struct EmptyCandidates : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Carries the 1-based input line on which parsing failed.
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

}  // namespace mbbp
