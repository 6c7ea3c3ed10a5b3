#pragma once

#include <stdexcept>
#include <string>

namespace edgeideal {

/// Operands live in rings with different variable counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live over different prime fields.
class FieldMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the domain where an operation is defined (edgeless graph
/// for an epsilon-complex, zero polynomial for an S-polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition (failed partition check,
/// parameter out of range).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input: graph specs, field lists, case-table rows.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured budget (S-pairs, vertex count) was exceeded. Never
/// swallowed: a computation that hits its budget has no answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgeideal
