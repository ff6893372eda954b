#pragma once

#include <stdexcept>
#include <string>

namespace switchmix {

/// The degree sequence has no simple realization.
class NotRealizable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exact switch chain has no non-adjacent edge pairs, so it can never move.
class FrozenChain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the configured state cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace switchmix
