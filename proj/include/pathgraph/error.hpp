#pragma once

#include <stdexcept>
#include <string>

namespace pathgraph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad ids, unparsable text, mismatched clique lists.
class InputError : public Error {
  public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
  public:
    using Error::Error;
};

// Exhaustive search refused because the instance exceeds its size guard.
class GuardRefusal : public Error {
  public:
    using Error::Error;
};

class GenerationError : public Error {
  public:
    using Error::Error;
};

class RealizationError : public Error {
  public:
    using Error::Error;
};

} // namespace pathgraph
