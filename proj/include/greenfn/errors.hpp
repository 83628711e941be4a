#pragma once

#include <stdexcept>
#include <string>

namespace greenfn {

/// Malformed or inconsistent input data (packs, type strings, Levi specs).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant failed on computed data.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two evaluators for a two-variable Green function disagree.
class CrossPathMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace greenfn
