#pragma once

#include <stdexcept>

namespace alpharad {

/// Input exceeds the hard cap of an exhaustive routine.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace alpharad
