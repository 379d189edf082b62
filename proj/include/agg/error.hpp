#pragma once

#include <stdexcept>
#include <string>

namespace agg {

/// Malformed or out-of-range input: unknown label, element past the
/// carrier, length mismatch, unparsable file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested search or enumeration exceeds its configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace agg
