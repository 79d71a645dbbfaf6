#pragma once

#include <stdexcept>

namespace vecquad {

/// A text spec (functional, algebra, or CLI argument) does not match the grammar.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation received non-finite components or out-of-range parameters.
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A solver was asked for a regime its formulas do not cover.
struct UnsupportedRegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A precondition on the coefficients does not hold.
struct ConditionNotMetError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The functional vanished on a nonzero product. Unreachable for the built-in
/// catalog (all entries are positive definite); the guard stays anyway.
struct DegenerateFunctionalError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace vecquad
