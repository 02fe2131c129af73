#pragma once

#include <stdexcept>
#include <string>

namespace coxfold {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's documented precondition.
class InvalidArguments : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or structured input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// fold_once called on a pair of edges that cannot be folded.
class InvalidFold : public Error {
 public:
  using Error::Error;
};

/// AO-move requested on a path that does not meet the valence conditions.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

/// Attaching map p: F -> Gamma is not a label-preserving morphism.
class InvalidAttachment : public Error {
 public:
  using Error::Error;
};

/// A decomposition is not in the state an unfolding or surgery requires.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but outside the domain where the operation is
/// meaningful (for example kappa on a non-reduced word).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The word-problem budget ran out before a decision was reached.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

}  // namespace coxfold
