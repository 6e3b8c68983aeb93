#pragma once

#include <stdexcept>
#include <string>

namespace ordkit {

/// Malformed or inconsistent input: bad labels, invalid structures,
/// violated preconditions. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded. Never silently truncated.
class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// A chain probe violates one of its structural invariants.
class MalformedProbe : public InputError {
 public:
  MalformedProbe(std::string invariant, const std::string& detail)
      : InputError("malformed probe (" + invariant + "): " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace ordkit
