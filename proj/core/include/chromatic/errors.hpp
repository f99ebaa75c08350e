#pragma once

#include <stdexcept>
#include <string>

namespace chromatic {

// Malformed input: bad file syntax, out-of-range ids, wrong certificate kind.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a documented precondition of an operation.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A compaction that cannot be normalized to a retraction. Never expected.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chromatic
