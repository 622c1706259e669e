#pragma once

#include <stdexcept>
#include <string>

namespace ivd {

/// Raised when an input violates general position (four cocyclic sites,
/// collinear defining triple). The diagram is left untouched.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal structural precondition fails. Always an engine bug.
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DuplicateSiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyIndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ivd
