#pragma once

#include <stdexcept>
#include <string>

namespace hexstrip {

/// Index outside the domain of a sequence or counting function.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Argument violates the precondition of a closed-form formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Strip length exceeds the enumerator's configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An unbreakable segment of a tiling matches no block of the model.
class MalformedBlock : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A block word uses a letter that the target model does not have.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown name passed where a family, model, or identity was expected.
class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input (CSV, JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexstrip
